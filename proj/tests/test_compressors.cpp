#include <doctest.h>

#include <bit>
#include <stdexcept>
#include <vector>

#include "axmul/compressors.hpp"
#include "axmul/cost_model.hpp"

using namespace axmul;

namespace {

std::vector<uint8_t> bits_of(int value, int n) {
  std::vector<uint8_t> bits(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<size_t>(i)] = (value >> i) & 1;
  return bits;
}

}  // namespace

TEST_CASE("cell census per shape") {
  const int fa[] = {1, 1, 2, 3, 4, 4};
  const int ha[] = {0, 2, 1, 1, 0, 3};
  for (int n = 3; n <= 8; ++n) {
    const Compressor c(n, FAKind::Exact);
    const Census census = c.net().census();
    CHECK(census.fa_total == fa[n - 3]);
    CHECK(census.ha_total == ha[n - 3]);
    CHECK(c.k_out() == (n == 3 ? 2 : n == 8 ? 4 : 3));
  }
}

TEST_CASE("exact compressors preserve popcount on every input") {
  for (int n = 3; n <= 8; ++n) {
    const Compressor c(n, FAKind::Exact);
    for (int v = 0; v < (1 << n); ++v) {
      const auto bits = bits_of(v, n);
      CHECK(c.eval_value(bits) ==
            static_cast<uint64_t>(std::popcount(static_cast<unsigned>(v))));
    }
  }
}

TEST_CASE("area reproduces the full compressor table") {
  const Catalog& cat = Catalog::instance();
  const int shapes[] = {3, 4, 5, 6, 7, 8};
  int checked = 0;
  for (FAKind kind : kAllFAKinds) {
    for (int n : shapes) {
      const Compressor c(n, kind);
      const std::string name = std::string(fa_short_name(kind)) + ":" +
                               std::to_string(n) + "-" +
                               std::to_string(c.k_out());
      CAPTURE(name);
      CHECK(c.area() == cat.lookup(name).size);
      ++checked;
    }
  }
  CHECK(checked == 72);
}

TEST_CASE("area spot values") {
  CHECK(Compressor(3, FAKind::Exact).area() == 28);
  CHECK(Compressor(8, FAKind::AMA5).area() == 74);
  CHECK(Compressor(6, FAKind::AMA1).area() == 74);
  CHECK(Compressor(5, FAKind::AMA3).area() == 36);
  CHECK(Compressor(4, FAKind::AXA2).area() == 34);
  CHECK(Compressor(7, FAKind::Exact).area() == 112);
}

TEST_CASE("AMA5 3-2 on (1,0,0)") {
  const Compressor c(3, FAKind::AMA5);
  const std::vector<uint8_t> in = {1, 0, 0};
  const auto out = c.eval(in);
  CHECK(out[0] == 0);  // sum
  CHECK(out[1] == 1);  // carry
  CHECK(c.eval_value(in) == 2);
}

TEST_CASE("unsupported shapes and bad input widths") {
  CHECK_THROWS_AS(Compressor(2, FAKind::Exact), std::invalid_argument);
  CHECK_THROWS_AS(Compressor(9, FAKind::Exact), std::invalid_argument);
  const Compressor c(5, FAKind::Exact);
  const std::vector<uint8_t> wrong = {1, 0, 1};
  CHECK_THROWS_AS(c.eval(wrong), std::invalid_argument);
}

TEST_CASE("evaluation is deterministic") {
  const Compressor c(8, FAKind::InXA2);
  const auto bits = bits_of(0b10110101, 8);
  const auto first = c.eval(bits);
  for (int rep = 0; rep < 4; ++rep) CHECK(c.eval(bits) == first);
}
