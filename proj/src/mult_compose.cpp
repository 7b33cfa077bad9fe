#include "axmul/mult_compose.hpp"

#include <stdexcept>

namespace axmul {

ComposedMultiplier::ComposedMultiplier(std::string name,
                                       std::unique_ptr<Multiplier> hh,
                                       std::unique_ptr<Multiplier> hl,
                                       std::unique_ptr<Multiplier> lh,
                                       std::unique_ptr<Multiplier> ll)
    : name_(std::move(name)),
      hh_(std::move(hh)), hl_(std::move(hl)),
      lh_(std::move(lh)), ll_(std::move(ll)) {
  const int w = hh_->width();
  if (hl_->width() != w || lh_->width() != w || ll_->width() != w)
    throw std::invalid_argument("composed blocks must share one width");
  width_ = 2 * w;
  if (width_ > 32)
    throw std::invalid_argument("composed width above 32 is not supported");
}

uint64_t ComposedMultiplier::mul(uint64_t a, uint64_t b) const {
  const int half = width_ / 2;
  const uint64_t mask = (uint64_t{1} << half) - 1;
  const uint64_t a_lo = a & mask, a_hi = (a >> half) & mask;
  const uint64_t b_lo = b & mask, b_hi = (b >> half) & mask;
  const uint64_t hh = hh_->mul(a_hi, b_hi);
  const uint64_t hl = hl_->mul(a_hi, b_lo);
  const uint64_t lh = lh_->mul(a_lo, b_hi);
  const uint64_t ll = ll_->mul(a_lo, b_lo);
  return (hh << width_) + ((hl + lh) << half) + ll;
}

namespace {

long multiplier_area(const Multiplier& m) {
  if (const auto* m8 = dynamic_cast<const Mult8*>(&m))
    return m8->census().area;
  if (const auto* comp = dynamic_cast<const ComposedMultiplier*>(&m))
    return comp->area();
  throw std::logic_error("no area model for this multiplier");
}

}  // namespace

long ComposedMultiplier::area() const {
  return multiplier_area(*hh_) + multiplier_area(*hl_) +
         multiplier_area(*lh_) + multiplier_area(*ll_);
}

std::unique_ptr<ComposedMultiplier> build16(const std::string& name) {
  if (name.rfind("16", 0) != 0)
    throw std::invalid_argument("16x16 design names start with \"16\": " + name);
  const auto variant = parse_name(std::string_view(name).substr(2));
  if (!variant)
    throw std::invalid_argument("unknown design name: " + name);

  MultiplierConfig exact{variant->arch, FAKind::Exact, FAKind::Exact, 8, ""};
  MultiplierConfig partial{variant->arch, FAKind::Exact, variant->lsb_kind, 8,
                           ""};
  MultiplierConfig low = *variant;
  low.name.clear();
  return std::make_unique<ComposedMultiplier>(
      name, std::make_unique<Mult8>(exact), std::make_unique<Mult8>(partial),
      std::make_unique<Mult8>(partial), std::make_unique<Mult8>(low));
}

long compose_area(const ComposedMultiplier& m) { return m.area(); }

long design_area(const std::string& name) {
  const auto m = make_multiplier(name);
  return multiplier_area(*m);
}

std::unique_ptr<Multiplier> make_multiplier(const std::string& design_name) {
  if (design_name.rfind("16", 0) == 0) return build16(design_name);
  const auto cfg = parse_name(design_name);
  if (!cfg) throw std::invalid_argument("unknown design name: " + design_name);
  return std::make_unique<Mult8>(*cfg);
}

}  // namespace axmul
