#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "axmul/circuit_net.hpp"
#include "axmul/fa_cells.hpp"

namespace axmul {

/// An n-to-k counter built from FA/HA cells: 3-2, 4-3, 5-3, 6-3, 7-3 or
/// 8-4. All full adders share one kind; half adders are exact. Output
/// bits carry weights 1, 2, 4 (and 8 for the 8-4).
class Compressor {
 public:
  Compressor(int n_in, FAKind kind);

  int n_in() const { return n_in_; }
  int k_out() const { return k_out_; }
  FAKind kind() const { return kind_; }
  const CircuitNet& net() const { return net_; }

  /// Output bits, least-significant first. Throws on width mismatch.
  std::vector<uint8_t> eval(std::span<const uint8_t> bits) const;

  /// Weighted value of the outputs; equals popcount(bits) for Exact.
  uint64_t eval_value(std::span<const uint8_t> bits) const;

  /// Transistor count: #FA * fa_size(kind) + #HA * 14.
  long area() const;

 private:
  int n_in_;
  int k_out_;
  FAKind kind_;
  CircuitNet net_;
};

Compressor build_compressor(int n_in, FAKind kind);

long compressor_area(const Compressor& c);

/// Cell census of the canonical decompositions, indexed by n_in.
/// 3-2: 1 FA; 4-3: 1 FA + 2 HA; 5-3: 2 FA + 1 HA; 6-3: 3 FA + 1 HA;
/// 7-3: 4 FA; 8-4: 4 FA + 3 HA.
int compressor_fa_count(int n_in);
int compressor_ha_count(int n_in);
int compressor_k_out(int n_in);

}  // namespace axmul
