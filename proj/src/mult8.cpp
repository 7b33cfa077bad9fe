#include "axmul/mult8.hpp"

#include <array>
#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

namespace axmul {

namespace {

// Tokens ordered longest-first so "In1" wins over a hypothetical "I".
struct KindToken {
  std::string_view text;
  FAKind kind;
};

constexpr std::array<KindToken, 12> kKindTokens = {{
    {"In1", FAKind::InXA1}, {"In2", FAKind::InXA2}, {"In3", FAKind::InXA3},
    {"M1", FAKind::AMA1},   {"M2", FAKind::AMA2},   {"M3", FAKind::AMA3},
    {"M4", FAKind::AMA4},   {"M5", FAKind::AMA5},   {"X1", FAKind::AXA1},
    {"X2", FAKind::AXA2},   {"X3", FAKind::AXA3},   {"E", FAKind::Exact},
}};

std::optional<FAKind> take_kind_token(std::string_view& rest) {
  for (const KindToken& tok : kKindTokens) {
    if (rest.starts_with(tok.text)) {
      rest.remove_prefix(tok.text.size());
      return tok.kind;
    }
  }
  return std::nullopt;
}

int lsb_fa_quota(int width) { return width * (width - 1) / 2 - (width - 1); }

// Census checks stay active in release builds: catalog area reporting
// leans on these exact counts.
void check_census(const CircuitNet& net, int want_fa, int want_ha,
                  int want_lsb_fa, int width, const char* what) {
  const Census census = net.census();
  int lsb_cells = 0;
  for (const CellInstance& cell : net.cells())
    if (cell.type == CellType::FullAdder && cell.column < width) ++lsb_cells;
  if (census.fa_total != want_fa || census.ha_total != want_ha ||
      lsb_cells != want_lsb_fa) {
    throw std::logic_error(std::string(what) + " census mismatch: " +
                           std::to_string(census.fa_total) + " FA / " +
                           std::to_string(census.ha_total) + " HA / " +
                           std::to_string(lsb_cells) + " LSB FA");
  }
}

}  // namespace

std::optional<MultiplierConfig> parse_name(std::string_view name) {
  std::string_view rest = name;
  MultiplierConfig cfg;
  cfg.name = std::string(name);
  if (rest.starts_with('C')) {
    cfg.arch = MultArch::Tree;
    rest.remove_prefix(1);
  }
  const auto msb = take_kind_token(rest);
  if (!msb) return std::nullopt;
  const auto lsb = take_kind_token(rest);
  if (!lsb || !rest.empty()) return std::nullopt;
  cfg.msb_kind = *msb;
  cfg.lsb_kind = *lsb;
  return cfg;
}

std::string format_name(const MultiplierConfig& cfg) {
  std::string out;
  if (cfg.arch == MultArch::Tree) out += 'C';
  out += fa_short_name(cfg.msb_kind);
  out += fa_short_name(cfg.lsb_kind);
  return out;
}

CircuitNet build_array(int width, FAKind msb_kind, FAKind lsb_kind) {
  if (width < 2 || width > 12)
    throw std::invalid_argument("array width out of range");
  const int n = width;
  std::vector<int> columns(static_cast<size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) columns[static_cast<size_t>(n * i + j)] = i + j;
  CircuitNet net(n * n, std::move(columns));
  const auto pp = [n](int i, int j) { return n * i + j; };
  const auto kind_for = [&](int col) { return col < n ? lsb_kind : msb_kind; };

  // Running sum bits by column; row i adds partial-product row i with a
  // ripple carry. FA ports: A = pp bit, B = running sum, Cin = carry.
  std::map<int, int> sum;
  for (int w = 0; w < n; ++w) sum[w] = pp(0, w);
  for (int i = 1; i < n; ++i) {
    auto [s, c] = net.add_ha(i, sum[i], pp(i, 0));
    sum[i] = s;
    for (int w = i + 1; w <= i + n - 1; ++w) {
      const auto it = sum.find(w);
      if (it == sum.end()) {
        std::tie(s, c) = net.add_ha(w, pp(i, w - i), c);
      } else {
        std::tie(s, c) = net.add_fa(kind_for(w), w, pp(i, w - i), it->second, c);
      }
      sum[w] = s;
    }
    sum[i + n] = c;
  }
  for (int w = 0; w < 2 * n; ++w) net.add_output(sum.at(w), w, 0);

  check_census(net, n * (n - 2), n, lsb_fa_quota(n), n, "array");
  return net;
}

CircuitNet build_array8(const MultiplierConfig& cfg) {
  if (cfg.arch != MultArch::Array)
    throw std::invalid_argument("build_array8 expects an array config");
  return build_array(8, cfg.msb_kind, cfg.lsb_kind);
}

namespace {

// Per-column (FA, HA) counts of the reduction schedule. Totals 36 FA and
// 15 HA with 18 FAs below column 8, leaving at most two bits per column.
struct ColumnPlan {
  int fa;
  int ha;
};

constexpr std::array<ColumnPlan, 16> kTreePlan = {{
    {0, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 0}, {3, 1}, {4, 1}, {5, 1},
    {5, 1}, {5, 0}, {4, 0}, {3, 0}, {0, 4}, {1, 2}, {0, 2}, {0, 0},
}};

}  // namespace

CircuitNet build_tree8(const MultiplierConfig& cfg) {
  if (cfg.arch != MultArch::Tree)
    throw std::invalid_argument("build_tree8 expects a tree config");
  constexpr int n = 8;
  std::vector<int> columns(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) columns[static_cast<size_t>(n * i + j)] = i + j;
  CircuitNet net(n * n, std::move(columns));
  const auto kind_for = [&](int col) {
    return col < n ? cfg.lsb_kind : cfg.msb_kind;
  };

  std::array<std::deque<int>, 17> pools;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pools[static_cast<size_t>(i + j)].push_back(n * i + j);

  for (int w = 0; w < 16; ++w) {
    auto& pool = pools[static_cast<size_t>(w)];
    for (int k = 0; k < kTreePlan[static_cast<size_t>(w)].fa; ++k) {
      const int a = pool.front(); pool.pop_front();
      const int b = pool.front(); pool.pop_front();
      const int c = pool.front(); pool.pop_front();
      auto [s, co] = net.add_fa(kind_for(w), w, a, b, c);
      pool.push_back(s);
      pools[static_cast<size_t>(w + 1)].push_back(co);
    }
    for (int k = 0; k < kTreePlan[static_cast<size_t>(w)].ha; ++k) {
      const int a = pool.front(); pool.pop_front();
      const int b = pool.front(); pool.pop_front();
      auto [s, co] = net.add_ha(w, a, b);
      pool.push_back(s);
      pools[static_cast<size_t>(w + 1)].push_back(co);
    }
  }
  for (int w = 0; w < 16; ++w) {
    const auto& pool = pools[static_cast<size_t>(w)];
    if (pool.empty() || pool.size() > 2)
      throw std::logic_error("tree residue is not a two-row form");
    int row = 0;
    for (int wire : pool) net.add_output(wire, w, row++);
  }

  check_census(net, 36, 15, 18, n, "tree");
  return net;
}

uint16_t mul8(const CircuitNet& net, uint8_t a, uint8_t b) {
  std::array<uint8_t, 64> inputs;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      inputs[static_cast<size_t>(8 * i + j)] =
          static_cast<uint8_t>(((a >> j) & 1) & ((b >> i) & 1));
  std::array<uint8_t, 192> scratch;
  const uint64_t value = net.eval(std::span<const uint8_t>(inputs),
                                  std::span<uint8_t>(scratch));
  return static_cast<uint16_t>(value & 0xFFFFu);
}

uint64_t mul_net(const CircuitNet& net, int width, uint64_t a, uint64_t b) {
  std::vector<uint8_t> inputs(static_cast<size_t>(width) * width);
  for (int i = 0; i < width; ++i)
    for (int j = 0; j < width; ++j)
      inputs[static_cast<size_t>(width * i + j)] =
          static_cast<uint8_t>(((a >> j) & 1) & ((b >> i) & 1));
  std::vector<uint8_t> scratch(static_cast<size_t>(net.wire_count()));
  const uint64_t value = net.eval(inputs, scratch);
  return value & ((uint64_t{1} << (2 * width)) - 1);
}

Mult8::Mult8(MultiplierConfig cfg)
    : cfg_(std::move(cfg)),
      net_(cfg_.arch == MultArch::Array ? build_array8(cfg_)
                                        : build_tree8(cfg_)) {
  if (cfg_.name.empty()) cfg_.name = format_name(cfg_);
}

uint64_t Mult8::mul(uint64_t a, uint64_t b) const {
  assert(a <= 0xFF && b <= 0xFF);
  return mul8(net_, static_cast<uint8_t>(a), static_cast<uint8_t>(b));
}

}  // namespace axmul
