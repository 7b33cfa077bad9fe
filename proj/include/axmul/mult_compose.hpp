#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "axmul/mult8.hpp"
#include "axmul/multiplier.hpp"

namespace axmul {

/// A 2w multiplier built from four half-width blocks:
///   P = (HH << 2w') + ((HL + LH) << w') + LL,  w' = block width,
/// with the final summation as exact integer addition (the catalog never
/// assigns cells or area to it). Block placement for catalog designs:
/// HH fully exact, HL/LH the partial ("E"-prefixed) variant of the named
/// kind, LL the named variant.
class ComposedMultiplier final : public Multiplier {
 public:
  ComposedMultiplier(std::string name, std::unique_ptr<Multiplier> hh,
                     std::unique_ptr<Multiplier> hl,
                     std::unique_ptr<Multiplier> lh,
                     std::unique_ptr<Multiplier> ll);

  int width() const override { return width_; }
  uint64_t mul(uint64_t a, uint64_t b) const override;
  const std::string& name() const override { return name_; }

  const Multiplier& hh() const { return *hh_; }
  const Multiplier& hl() const { return *hl_; }
  const Multiplier& lh() const { return *lh_; }
  const Multiplier& ll() const { return *ll_; }

  /// Sum of the four block areas; the ideal final adders contribute none.
  long area() const;

 private:
  std::string name_;
  int width_;
  std::unique_ptr<Multiplier> hh_, hl_, lh_, ll_;
};

/// Builds a 16x16 design from its name: "16" + optional "C" + variant,
/// e.g. "16EM1", "16CM5M5". Throws std::invalid_argument on bad names.
std::unique_ptr<ComposedMultiplier> build16(const std::string& name);

long compose_area(const ComposedMultiplier& m);

/// Area of any design name (8-bit from its net census, 16-bit by block
/// additivity).
long design_area(const std::string& name);

}  // namespace axmul
