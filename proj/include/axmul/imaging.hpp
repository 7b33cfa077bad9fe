#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "axmul/multiplier.hpp"

namespace axmul {

/// Row-major 8-bit grayscale image.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> data;

  uint8_t at(int x, int y) const {
    return data[static_cast<size_t>(y) * static_cast<size_t>(width) +
                static_cast<size_t>(x)];
  }
  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Binary PGM ("P5", maxval 255) reader. Handles '#' comments in the
/// header; throws std::runtime_error on malformed input, other maxvals or
/// truncated pixel data.
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm_file(const std::string& path);

/// Writes "P5\n<w> <h>\n255\n" followed by the raw samples.
void write_pgm(const GrayImage& img, std::ostream& out);
void write_pgm_file(const GrayImage& img, const std::string& path);

/// Pixel-wise multiply-blend: out = clamp(floor(m(a, b) / 255), 0, 255).
/// 16-bit multipliers see the zero-extended pixel pair. Throws on
/// dimension mismatch.
GrayImage blend(const GrayImage& a, const GrayImage& b, const Multiplier& m);

/// Reference blend through exact integer multiplication.
GrayImage blend_exact(const GrayImage& a, const GrayImage& b);

/// 10*log10(sum(ref^2) / sum((ref-test)^2)) in dB. +infinity when the
/// images are identical, -infinity for an all-zero reference with nonzero
/// noise. Throws on dimension mismatch.
double snr(const GrayImage& reference, const GrayImage& test);

}  // namespace axmul
