#pragma once

#include <cstdint>
#include <string>

#include "axmul/multiplier.hpp"

namespace axmul {

enum class EvalMode : uint8_t { Exhaustive, Sampled };

/// How inputs whose exact product is zero enter MRED. They are skipped by
/// default (RED is undefined there); CountAsZero folds them in as RED=0.
enum class MredZeroPolicy : uint8_t { Skip, CountAsZero };

struct ErrorReport {
  std::string name;
  EvalMode mode = EvalMode::Exhaustive;
  uint64_t total_pairs = 0;
  uint64_t err_pairs = 0;   // pairs with any mismatch
  uint64_t sum_ed = 0;      // exact integer accumulation
  uint64_t max_ed = 0;
  uint64_t mred_skipped = 0;
  double er = 0.0;
  double med = 0.0;
  double nmed = 0.0;
  double mred = 0.0;
  uint64_t sample_count = 0;  // sampled mode only
  uint64_t seed = 0;          // sampled mode only
};

struct EvalOptions {
  int workers = 1;
  MredZeroPolicy zero_policy = MredZeroPolicy::Skip;
};

/// |exact - approx|.
uint64_t ed(uint64_t exact, uint64_t approx);

/// med / (2^w - 1)^2.
double nmed(double med, int width);

/// Full sweep of all 2^(2w) operand pairs; width must be at most 12.
/// Integer accumulators (err_pairs, sum_ed, max_ed) are bit-identical for
/// any worker count; MRED merges per-operand-row partial sums in row
/// order, so it is too.
ErrorReport eval_exhaustive(const Multiplier& m, const EvalOptions& opts = {});

/// n operand pairs drawn from a counter-based 64-bit generator, so the
/// stream is random-access and reports are identical for any worker
/// count. Throws if n == 0.
ErrorReport eval_sampled(const Multiplier& m, uint64_t n, uint64_t seed,
                         const EvalOptions& opts = {});

/// The i-th sample of the seeded stream (exposed so golden reports can be
/// regenerated elsewhere): SplitMix64 finalizer over seed + (i+1)*phi64.
uint64_t sample_stream(uint64_t seed, uint64_t index);

}  // namespace axmul
