#include "axmul/circuit_net.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace axmul {

CircuitNet::CircuitNet(int input_count, std::vector<int> input_columns)
    : input_count_(input_count),
      wire_count_(input_count),
      input_columns_(std::move(input_columns)) {
  if (static_cast<int>(input_columns_.size()) != input_count_)
    throw std::invalid_argument("input column list does not match input count");
}

std::pair<int, int> CircuitNet::add_fa(FAKind kind, int column, int in_a,
                                       int in_b, int in_cin) {
  assert(in_a >= 0 && in_a < wire_count_);
  assert(in_b >= 0 && in_b < wire_count_);
  assert(in_cin >= 0 && in_cin < wire_count_);
  const int sum = wire_count_++;
  const int carry = wire_count_++;
  cells_.push_back({CellType::FullAdder, kind, column, {in_a, in_b, in_cin},
                    sum, carry});
  return {sum, carry};
}

std::pair<int, int> CircuitNet::add_ha(int column, int in_a, int in_b) {
  assert(in_a >= 0 && in_a < wire_count_);
  assert(in_b >= 0 && in_b < wire_count_);
  const int sum = wire_count_++;
  const int carry = wire_count_++;
  cells_.push_back(
      {CellType::HalfAdder, FAKind::Exact, column, {in_a, in_b, -1}, sum,
       carry});
  return {sum, carry};
}

void CircuitNet::add_output(int wire, int column, int row) {
  assert(wire >= 0 && wire < wire_count_);
  outputs_.push_back({wire, column, row});
}

uint64_t CircuitNet::eval(std::span<const uint8_t> inputs,
                          std::span<uint8_t> scratch) const {
  if (static_cast<int>(inputs.size()) != input_count_)
    throw std::invalid_argument("input width mismatch");
  assert(static_cast<int>(scratch.size()) >= wire_count_);
  for (int i = 0; i < input_count_; ++i) scratch[i] = inputs[i];
  for (const CellInstance& cell : cells_) {
    BitPair out;
    if (cell.type == CellType::FullAdder) {
      out = fa_eval(cell.kind, scratch[cell.inputs[0]], scratch[cell.inputs[1]],
                    scratch[cell.inputs[2]]);
    } else {
      out = ha_eval(scratch[cell.inputs[0]], scratch[cell.inputs[1]]);
    }
    scratch[cell.sum_wire] = out.sum;
    scratch[cell.carry_wire] = out.carry;
  }
  uint64_t value = 0;
  for (const OutputBit& bit : outputs_)
    value += static_cast<uint64_t>(scratch[bit.wire]) << bit.column;
  return value;
}

uint64_t CircuitNet::eval(std::span<const uint8_t> inputs) const {
  std::vector<uint8_t> scratch(static_cast<size_t>(wire_count_));
  return eval(inputs, scratch);
}

Census CircuitNet::census() const {
  Census c;
  for (const CellInstance& cell : cells_) {
    if (cell.type == CellType::FullAdder) {
      ++c.fa_by_kind[static_cast<size_t>(cell.kind)];
      ++c.fa_total;
      c.area += fa_size(cell.kind);
    } else {
      ++c.ha_total;
      c.area += kHalfAdderArea;
    }
  }
  return c;
}

std::string CircuitNet::to_json() const {
  nlohmann::json j;
  j["input_count"] = input_count_;
  j["wire_count"] = wire_count_;
  nlohmann::json inputs = nlohmann::json::array();
  for (int i = 0; i < input_count_; ++i)
    inputs.push_back({{"wire", i}, {"column", input_columns_[i]}});
  j["inputs"] = inputs;
  nlohmann::json cells = nlohmann::json::array();
  for (const CellInstance& cell : cells_) {
    nlohmann::json c;
    c["type"] = cell.type == CellType::FullAdder ? "FA" : "HA";
    c["kind"] = std::string(fa_short_name(cell.kind));
    c["column"] = cell.column;
    if (cell.type == CellType::FullAdder)
      c["inputs"] = {cell.inputs[0], cell.inputs[1], cell.inputs[2]};
    else
      c["inputs"] = {cell.inputs[0], cell.inputs[1]};
    c["sum_wire"] = cell.sum_wire;
    c["carry_wire"] = cell.carry_wire;
    cells.push_back(c);
  }
  j["cells"] = cells;
  nlohmann::json outs = nlohmann::json::array();
  for (const OutputBit& bit : outputs_)
    outs.push_back({{"wire", bit.wire}, {"column", bit.column}, {"row", bit.row}});
  j["outputs"] = outs;
  const Census c = census();
  j["census"] = {{"fa", c.fa_total}, {"ha", c.ha_total}, {"area", c.area}};
  return j.dump(2);
}

}  // namespace axmul
