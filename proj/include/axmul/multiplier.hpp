#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace axmul {

/// Common face of every unsigned multiplier model. Implementations are
/// immutable after construction; mul() is pure and safe to call from any
/// number of threads.
class Multiplier {
 public:
  virtual ~Multiplier() = default;
  virtual int width() const = 0;
  virtual uint64_t mul(uint64_t a, uint64_t b) const = 0;
  virtual const std::string& name() const = 0;
};

/// Builds any supported design from its name: 8x8 ("EE", "EM1", "CEIn1",
/// ...) or composed 16x16 ("16EE", "16CM5M5", ...).
/// Throws std::invalid_argument on unknown names.
std::unique_ptr<Multiplier> make_multiplier(const std::string& design_name);

}  // namespace axmul
