#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "axmul/circuit_net.hpp"
#include "axmul/fa_cells.hpp"
#include "axmul/multiplier.hpp"

namespace axmul {

enum class MultArch : uint8_t { Array, Tree };

/// Parsed design name. Catalog variants either keep the most
/// significant region exact ("EM1") or approximate everything ("M1M1");
/// the builders accept any kind pair.
struct MultiplierConfig {
  MultArch arch = MultArch::Array;
  FAKind msb_kind = FAKind::Exact;
  FAKind lsb_kind = FAKind::Exact;
  int width = 8;
  std::string name;
};

/// Parses an 8x8 design name: optional "C" tree prefix followed by the
/// MSB-region and LSB-region cell tokens (E, M1..M5, X1..X3, In1..In3).
std::optional<MultiplierConfig> parse_name(std::string_view name);

/// Canonical name for a config; format_name(parse_name(x)) == x for all
/// catalog names.
std::string format_name(const MultiplierConfig& cfg);

/// Ripple-carry array of width*width AND gates and width-1 adder rows.
/// For width 8 the census is 48 FA + 8 HA with exactly 21 FA cells whose
/// sum lands in columns 0..7; both are asserted at build time. FA cells
/// in columns below `width` take lsb_kind, the rest msb_kind; half adders
/// stay exact.
CircuitNet build_array(int width, FAKind msb_kind, FAKind lsb_kind);

CircuitNet build_array8(const MultiplierConfig& cfg);

/// Column-wise 3:2/2:2 reduction of the 8x8 partial products down to two
/// rows (36 FA + 15 HA, 18 FA cells in columns 0..7; asserted at build
/// time). The closing two-row carry-propagate add is modeled as exact
/// integer addition of the residue rows and owns no cells, mirroring the
/// catalog's size accounting.
CircuitNet build_tree8(const MultiplierConfig& cfg);

/// Evaluates a built 8x8 net on one operand pair (AND-gate partial
/// products, then the cells, then the residue-row sum).
uint16_t mul8(const CircuitNet& net, uint8_t a, uint8_t b);

/// Same evaluation for nets of other widths (toy arrays in tests).
uint64_t mul_net(const CircuitNet& net, int width, uint64_t a, uint64_t b);

/// An 8x8 design bound to its net.
class Mult8 final : public Multiplier {
 public:
  explicit Mult8(MultiplierConfig cfg);

  int width() const override { return 8; }
  uint64_t mul(uint64_t a, uint64_t b) const override;
  const std::string& name() const override { return cfg_.name; }

  const MultiplierConfig& config() const { return cfg_; }
  const CircuitNet& net() const { return net_; }
  Census census() const { return net_.census(); }

 private:
  MultiplierConfig cfg_;
  CircuitNet net_;
};

}  // namespace axmul
