#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace axmul {

/// One row of the static hardware catalog. Power units differ by class
/// (nW for cells, uW for compressors and multipliers); delay is absent
/// for compressor rows.
struct CatalogEntry {
  std::string name;
  std::string cls;  // cell | compressor | mult8_array | mult8_tree |
                    // mult16_array | mult16_tree
  std::optional<double> delay_ps;
  double power = 0.0;
  std::string power_unit;  // "nW" or "uW"
  long size = 0;
  std::string source_table;
};

/// Immutable catalog keyed by design name.
class Catalog {
 public:
  static Catalog from_csv(const std::string& csv_text);
  /// Embedded table, unless the AXMUL_CATALOG environment variable names
  /// a CSV file to load instead.
  static const Catalog& instance();
  static Catalog load_default();

  const CatalogEntry& lookup(const std::string& name) const;
  const CatalogEntry* find(const std::string& name) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<const CatalogEntry*> by_class(const std::string& cls) const;

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, size_t> index_;
};

/// The embedded catalog CSV (columns
/// name,class,delay_ps,power,power_unit,size,source_table).
extern const char* const kEmbeddedCatalogCsv;

enum class CostMetric { Area, Power, Delay, Pdp };

/// power * delay / 1000, the catalog's printed PDP convention (exactly
/// femtojoules for uW x ps rows). Throws if the entry has no delay.
double pdp(const CatalogEntry& entry);

/// 100 * (exact - design) / exact on the chosen metric; negative when the
/// design costs more than the exact baseline.
double reduction(const CatalogEntry& exact, const CatalogEntry& design,
                 CostMetric metric);

/// Weights for area, power, delay, error and PDP. Each in [0, 1].
struct FitnessCoeffs {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0, c5 = 0.0;
};

/// c1*A/A0 + c2*P/P0 + c3*D/D0 + c4*E + c5*PDP/PDP0, where the baseline
/// entry normalizes the hardware metrics. E is the raw error figure
/// (error rows for cells, ER for multipliers). Lower is better. Throws on
/// a zero baseline metric.
double fitness(const CatalogEntry& entry, double error_figure,
               const FitnessCoeffs& coeffs, const CatalogEntry& baseline);

enum class Direction { Maximize, Minimize };

struct ObjectiveSchema {
  std::vector<std::string> names;
  std::vector<Direction> directions;
};

struct ParetoPoint {
  std::string name;
  std::vector<double> values;
};

/// True iff p is at least as good as q on every objective and strictly
/// better on at least one. Throws on schema/value arity mismatch.
bool dominates(const ObjectiveSchema& schema, const ParetoPoint& p,
               const ParetoPoint& q);

/// The non-dominated subset, in input order. Throws on empty input.
std::vector<ParetoPoint> pareto_front(const ObjectiveSchema& schema,
                                      const std::vector<ParetoPoint>& points);

}  // namespace axmul
