#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace axmul {

/// The twelve full-adder cell designs: the exact mirror adder, five
/// approximate mirror adders, three XOR/XNOR-based cells and three
/// inexact cells.
enum class FAKind : uint8_t {
  Exact,
  AMA1, AMA2, AMA3, AMA4, AMA5,
  AXA1, AXA2, AXA3,
  InXA1, InXA2, InXA3,
};

inline constexpr int kNumFAKinds = 12;

inline constexpr std::array<FAKind, kNumFAKinds> kAllFAKinds = {
    FAKind::Exact, FAKind::AMA1, FAKind::AMA2, FAKind::AMA3, FAKind::AMA4,
    FAKind::AMA5,  FAKind::AXA1, FAKind::AXA2, FAKind::AXA3, FAKind::InXA1,
    FAKind::InXA2, FAKind::InXA3};

struct BitPair {
  uint8_t sum;
  uint8_t carry;
  friend bool operator==(const BitPair&, const BitPair&) = default;
};

/// Static hardware figures of a single cell. Units follow the source
/// catalog: nanowatts, picoseconds, and the catalog's printed PDP scale
/// (power * delay / 1000).
struct CellMetrics {
  int size;          // transistor count
  double power_nw;
  double delay_ps;
  double pdp_fj;
};

/// Evaluates one full-adder cell. Total over all 8 input triples, pure.
BitPair fa_eval(FAKind kind, uint8_t a, uint8_t b, uint8_t cin);

/// Exact half adder. Always exact; area constant is 14 transistors.
BitPair ha_eval(uint8_t a, uint8_t b);

inline constexpr int kHalfAdderArea = 14;

/// Number of input triples where this kind differs from the exact adder
/// in sum, carry or both. A triple counts once.
int fa_error_rows(FAKind kind);

/// Catalog metrics for a cell kind.
const CellMetrics& cell_metrics(FAKind kind);

int fa_size(FAKind kind);

/// Short name as used in design strings: E, M1..M5, X1..X3, In1..In3.
std::string_view fa_short_name(FAKind kind);

/// Family name: Exact, AMA1..AMA5, AXA1..AXA3, InXA1..InXA3.
std::string_view fa_long_name(FAKind kind);

/// Parses a short or long cell name. Returns nullopt on unknown tokens.
std::optional<FAKind> parse_fa_kind(std::string_view name);

}  // namespace axmul
