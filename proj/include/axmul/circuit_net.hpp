#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "axmul/fa_cells.hpp"

namespace axmul {

enum class CellType : uint8_t { FullAdder, HalfAdder };

/// One FA/HA instance. Input wires must be defined before the cell in the
/// net's cell order (nets are built and evaluated in topological order).
struct CellInstance {
  CellType type;
  FAKind kind;                // Exact for half adders
  int column;                 // bit position the sum output contributes to
  std::array<int, 3> inputs;  // inputs[2] == -1 for half adders
  int sum_wire;
  int carry_wire;
};

/// A bit the net exposes as part of its result. `row` distinguishes the
/// two residue rows of nets that end in a redundant (two-row) form; nets
/// with a completed carry chain only use row 0.
struct OutputBit {
  int wire;
  int column;
  int row;
};

struct Census {
  std::array<int, kNumFAKinds> fa_by_kind{};
  int fa_total = 0;
  int ha_total = 0;
  long area = 0;  // transistors; AND gates for partial products excluded
};

/// Immutable structural graph of FA/HA instances. Wires are dense ints:
/// [0, input_count) are inputs, the rest are cell outputs in build order.
class CircuitNet {
 public:
  CircuitNet(int input_count, std::vector<int> input_columns);

  /// Appends a full adder; returns {sum_wire, carry_wire}.
  std::pair<int, int> add_fa(FAKind kind, int column, int in_a, int in_b,
                             int in_cin);
  /// Appends an exact half adder; returns {sum_wire, carry_wire}.
  std::pair<int, int> add_ha(int column, int in_a, int in_b);

  void add_output(int wire, int column, int row = 0);

  int input_count() const { return input_count_; }
  int wire_count() const { return wire_count_; }
  const std::vector<CellInstance>& cells() const { return cells_; }
  const std::vector<OutputBit>& outputs() const { return outputs_; }
  const std::vector<int>& input_columns() const { return input_columns_; }

  /// Evaluates every cell in order and returns the weighted value of all
  /// output bits. `scratch` must hold wire_count() entries; it lets hot
  /// callers reuse one buffer per thread. Pure: no internal state.
  uint64_t eval(std::span<const uint8_t> inputs,
                std::span<uint8_t> scratch) const;

  /// Convenience wrapper that allocates its own scratch.
  uint64_t eval(std::span<const uint8_t> inputs) const;

  Census census() const;

  /// Structural listing (cells, kinds, columns, wiring) for inspection.
  std::string to_json() const;

 private:
  int input_count_;
  int wire_count_;
  std::vector<int> input_columns_;
  std::vector<CellInstance> cells_;
  std::vector<OutputBit> outputs_;
};

}  // namespace axmul
