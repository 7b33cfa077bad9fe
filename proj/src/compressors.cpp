#include "axmul/compressors.hpp"

#include <cassert>
#include <stdexcept>

namespace axmul {

namespace {

CircuitNet build_net(int n_in, FAKind kind) {
  CircuitNet net(n_in, std::vector<int>(static_cast<size_t>(n_in), 0));
  switch (n_in) {
    case 3: {
      auto [s, c] = net.add_fa(kind, 0, 0, 1, 2);
      net.add_output(s, 0);
      net.add_output(c, 1);
      break;
    }
    case 4: {
      auto [s, c] = net.add_fa(kind, 0, 0, 1, 2);
      auto [s2, c2] = net.add_ha(0, s, 3);
      auto [s3, c3] = net.add_ha(1, c, c2);
      net.add_output(s2, 0);
      net.add_output(s3, 1);
      net.add_output(c3, 2);
      break;
    }
    case 5: {
      auto [s1, c1] = net.add_fa(kind, 0, 0, 1, 2);
      auto [s2, c2] = net.add_fa(kind, 0, s1, 3, 4);
      auto [s3, c3] = net.add_ha(1, c1, c2);
      net.add_output(s2, 0);
      net.add_output(s3, 1);
      net.add_output(c3, 2);
      break;
    }
    case 6: {
      auto [sa, ca] = net.add_fa(kind, 0, 0, 1, 2);
      auto [sb, cb] = net.add_fa(kind, 0, 3, 4, 5);
      auto [s, c] = net.add_ha(0, sa, sb);
      auto [s2, c2] = net.add_fa(kind, 1, ca, cb, c);
      net.add_output(s, 0);
      net.add_output(s2, 1);
      net.add_output(c2, 2);
      break;
    }
    case 7: {
      auto [sa, ca] = net.add_fa(kind, 0, 0, 1, 2);
      auto [sb, cb] = net.add_fa(kind, 0, 3, 4, 5);
      auto [s, c] = net.add_fa(kind, 0, sa, sb, 6);
      auto [s2, c2] = net.add_fa(kind, 1, ca, cb, c);
      net.add_output(s, 0);
      net.add_output(s2, 1);
      net.add_output(c2, 2);
      break;
    }
    case 8: {
      auto [sa, ca] = net.add_fa(kind, 0, 0, 1, 2);
      auto [sb, cb] = net.add_fa(kind, 0, 3, 4, 5);
      auto [sh, ch] = net.add_ha(0, 6, 7);
      auto [s, c] = net.add_fa(kind, 0, sa, sb, sh);
      auto [t, d] = net.add_fa(kind, 1, ca, cb, ch);
      auto [o2, u] = net.add_ha(1, c, t);
      auto [o4, o8] = net.add_ha(2, d, u);
      net.add_output(s, 0);
      net.add_output(o2, 1);
      net.add_output(o4, 2);
      net.add_output(o8, 3);
      break;
    }
    default:
      throw std::invalid_argument("unsupported compressor input count: " +
                                  std::to_string(n_in));
  }
  return net;
}

}  // namespace

int compressor_k_out(int n_in) {
  switch (n_in) {
    case 3: return 2;
    case 4: case 5: case 6: case 7: return 3;
    case 8: return 4;
    default:
      throw std::invalid_argument("unsupported compressor input count");
  }
}

int compressor_fa_count(int n_in) {
  switch (n_in) {
    case 3: case 4: return 1;
    case 5: return 2;
    case 6: return 3;
    case 7: case 8: return 4;
    default:
      throw std::invalid_argument("unsupported compressor input count");
  }
}

int compressor_ha_count(int n_in) {
  switch (n_in) {
    case 3: case 7: return 0;
    case 4: return 2;
    case 5: case 6: return 1;
    case 8: return 3;
    default:
      throw std::invalid_argument("unsupported compressor input count");
  }
}

Compressor::Compressor(int n_in, FAKind kind)
    : n_in_(n_in), k_out_(compressor_k_out(n_in)), kind_(kind),
      net_(build_net(n_in, kind)) {
  const Census c = net_.census();
  if (c.fa_total != compressor_fa_count(n_in) ||
      c.ha_total != compressor_ha_count(n_in))
    throw std::logic_error("compressor census mismatch");
}

std::vector<uint8_t> Compressor::eval(std::span<const uint8_t> bits) const {
  if (static_cast<int>(bits.size()) != n_in_)
    throw std::invalid_argument("compressor input width mismatch");
  std::vector<uint8_t> scratch(static_cast<size_t>(net_.wire_count()));
  net_.eval(bits, scratch);
  std::vector<uint8_t> out(static_cast<size_t>(k_out_));
  for (const OutputBit& bit : net_.outputs())
    out[static_cast<size_t>(bit.column)] = scratch[static_cast<size_t>(bit.wire)];
  return out;
}

uint64_t Compressor::eval_value(std::span<const uint8_t> bits) const {
  if (static_cast<int>(bits.size()) != n_in_)
    throw std::invalid_argument("compressor input width mismatch");
  return net_.eval(bits);
}

long Compressor::area() const { return net_.census().area; }

Compressor build_compressor(int n_in, FAKind kind) {
  return Compressor(n_in, kind);
}

long compressor_area(const Compressor& c) { return c.area(); }

}  // namespace axmul
