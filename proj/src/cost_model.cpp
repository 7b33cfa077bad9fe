#include "axmul/cost_model.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace axmul {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

Catalog Catalog::from_csv(const std::string& csv_text) {
  Catalog cat;
  std::istringstream in(csv_text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 7)
      throw std::runtime_error("catalog line " + std::to_string(line_no) +
                               ": expected 7 fields");
    CatalogEntry e;
    e.name = fields[0];
    e.cls = fields[1];
    if (!fields[2].empty()) e.delay_ps = std::stod(fields[2]);
    e.power = std::stod(fields[3]);
    e.power_unit = fields[4];
    e.size = std::stol(fields[5]);
    e.source_table = fields[6];
    if (cat.index_.count(e.name))
      throw std::runtime_error("duplicate catalog entry: " + e.name);
    cat.index_[e.name] = cat.entries_.size();
    cat.entries_.push_back(std::move(e));
  }
  return cat;
}

Catalog Catalog::load_default() {
  if (const char* path = std::getenv("AXMUL_CATALOG")) {
    std::ifstream in(path);
    if (!in)
      throw std::runtime_error(std::string("cannot open AXMUL_CATALOG file: ") +
                               path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_csv(buf.str());
  }
  return from_csv(kEmbeddedCatalogCsv);
}

const Catalog& Catalog::instance() {
  static const Catalog catalog = load_default();
  return catalog;
}

const CatalogEntry& Catalog::lookup(const std::string& name) const {
  const CatalogEntry* e = find(name);
  if (!e) throw std::out_of_range("unknown catalog entry: " + name);
  return *e;
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  const auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<const CatalogEntry*> Catalog::by_class(
    const std::string& cls) const {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : entries_)
    if (e.cls == cls) out.push_back(&e);
  return out;
}

double pdp(const CatalogEntry& entry) {
  if (!entry.delay_ps)
    throw std::invalid_argument("no delay recorded for " + entry.name);
  return entry.power * *entry.delay_ps / 1000.0;
}

namespace {

double metric_value(const CatalogEntry& e, CostMetric metric) {
  switch (metric) {
    case CostMetric::Area: return static_cast<double>(e.size);
    case CostMetric::Power: return e.power;
    case CostMetric::Delay:
      if (!e.delay_ps) throw std::invalid_argument("no delay for " + e.name);
      return *e.delay_ps;
    case CostMetric::Pdp: return pdp(e);
  }
  throw std::logic_error("bad metric");
}

}  // namespace

double reduction(const CatalogEntry& exact, const CatalogEntry& design,
                 CostMetric metric) {
  const double base = metric_value(exact, metric);
  if (base <= 0.0)
    throw std::invalid_argument("baseline metric must be positive");
  return 100.0 * (base - metric_value(design, metric)) / base;
}

double fitness(const CatalogEntry& entry, double error_figure,
               const FitnessCoeffs& coeffs, const CatalogEntry& baseline) {
  const double a0 = static_cast<double>(baseline.size);
  const double p0 = baseline.power;
  if (a0 <= 0.0 || p0 <= 0.0)
    throw std::invalid_argument("zero baseline metric");
  double value = coeffs.c1 * static_cast<double>(entry.size) / a0 +
                 coeffs.c2 * entry.power / p0 + coeffs.c4 * error_figure;
  if (coeffs.c3 != 0.0) {
    if (!baseline.delay_ps || *baseline.delay_ps <= 0.0)
      throw std::invalid_argument("zero baseline delay");
    value += coeffs.c3 * metric_value(entry, CostMetric::Delay) /
             *baseline.delay_ps;
  }
  if (coeffs.c5 != 0.0) {
    const double pdp0 = pdp(baseline);
    if (pdp0 <= 0.0) throw std::invalid_argument("zero baseline PDP");
    value += coeffs.c5 * pdp(entry) / pdp0;
  }
  return value;
}

bool dominates(const ObjectiveSchema& schema, const ParetoPoint& p,
               const ParetoPoint& q) {
  const size_t n = schema.directions.size();
  if (p.values.size() != n || q.values.size() != n)
    throw std::invalid_argument("objective arity mismatch");
  bool strictly_better = false;
  for (size_t i = 0; i < n; ++i) {
    const double sign = schema.directions[i] == Direction::Maximize ? 1.0 : -1.0;
    const double diff = sign * (p.values[i] - q.values[i]);
    if (diff < 0.0) return false;
    if (diff > 0.0) strictly_better = true;
  }
  return strictly_better;
}

std::vector<ParetoPoint> pareto_front(const ObjectiveSchema& schema,
                                      const std::vector<ParetoPoint>& points) {
  if (points.empty())
    throw std::invalid_argument("pareto_front needs at least one point");
  // Simple cull: keep a running non-dominated archive, then restore the
  // input order.
  std::vector<size_t> archive;
  for (size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (size_t k = 0; k < archive.size();) {
      if (dominates(schema, points[archive[k]], points[i])) {
        dominated = true;
        break;
      }
      if (dominates(schema, points[i], points[archive[k]]))
        archive.erase(archive.begin() + static_cast<long>(k));
      else
        ++k;
    }
    if (!dominated) archive.push_back(i);
  }
  std::sort(archive.begin(), archive.end());
  std::vector<ParetoPoint> front;
  front.reserve(archive.size());
  for (size_t idx : archive) front.push_back(points[idx]);
  return front;
}

}  // namespace axmul
