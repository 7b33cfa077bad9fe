#include "axmul/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace axmul {

namespace {

// Next whitespace-delimited header token, skipping '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  for (;;) {
    const int c = in.get();
    if (c == EOF) {
      if (tok.empty()) throw std::runtime_error("truncated PGM header");
      return tok;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return tok;
      continue;
    }
    if (c == '#' && tok.empty()) {
      std::string comment;
      std::getline(in, comment);
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
}

int parse_header_int(std::istream& in, const char* what) {
  const std::string tok = next_token(in);
  try {
    size_t used = 0;
    const int value = std::stoi(tok, &used);
    if (used != tok.size() || value <= 0) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("bad PGM ") + what + ": " + tok);
  }
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
  const std::string magic = next_token(in);
  if (magic != "P5")
    throw std::runtime_error("not a binary PGM (expected P5, got " + magic + ")");
  GrayImage img;
  img.width = parse_header_int(in, "width");
  img.height = parse_header_int(in, "height");
  const int maxval = parse_header_int(in, "maxval");
  if (maxval != 255)
    throw std::runtime_error("unsupported PGM maxval " + std::to_string(maxval) +
                             " (only 255)");
  // The header ends with exactly one whitespace byte (already consumed by
  // the tokenizer).
  const size_t n = static_cast<size_t>(img.width) * static_cast<size_t>(img.height);
  img.data.resize(n);
  in.read(reinterpret_cast<char*>(img.data.data()),
          static_cast<std::streamsize>(n));
  if (static_cast<size_t>(in.gcount()) != n)
    throw std::runtime_error("truncated PGM pixel data");
  return img;
}

GrayImage read_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_pgm(in);
}

void write_pgm(const GrayImage& img, std::ostream& out) {
  out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
}

void write_pgm_file(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_pgm(img, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

void require_same_shape(const GrayImage& a, const GrayImage& b) {
  if (a.width != b.width || a.height != b.height)
    throw std::invalid_argument("image dimensions differ");
}

uint8_t rescale(uint64_t product) {
  const uint64_t scaled = product / 255;
  return static_cast<uint8_t>(std::min<uint64_t>(scaled, 255));
}

}  // namespace

GrayImage blend(const GrayImage& a, const GrayImage& b, const Multiplier& m) {
  require_same_shape(a, b);
  GrayImage out{a.width, a.height, std::vector<uint8_t>(a.data.size())};
  for (size_t i = 0; i < a.data.size(); ++i)
    out.data[i] = rescale(m.mul(a.data[i], b.data[i]));
  return out;
}

GrayImage blend_exact(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a, b);
  GrayImage out{a.width, a.height, std::vector<uint8_t>(a.data.size())};
  for (size_t i = 0; i < a.data.size(); ++i)
    out.data[i] =
        rescale(static_cast<uint64_t>(a.data[i]) * static_cast<uint64_t>(b.data[i]));
  return out;
}

double snr(const GrayImage& reference, const GrayImage& test) {
  require_same_shape(reference, test);
  uint64_t signal = 0;
  uint64_t noise = 0;
  for (size_t i = 0; i < reference.data.size(); ++i) {
    const int64_t ref = reference.data[i];
    const int64_t diff = ref - static_cast<int64_t>(test.data[i]);
    signal += static_cast<uint64_t>(ref * ref);
    noise += static_cast<uint64_t>(diff * diff);
  }
  if (noise == 0) return std::numeric_limits<double>::infinity();
  if (signal == 0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(static_cast<double>(signal) /
                           static_cast<double>(noise));
}

}  // namespace axmul
