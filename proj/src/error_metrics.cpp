#include "axmul/error_metrics.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace axmul {

uint64_t ed(uint64_t exact, uint64_t approx) {
  return exact > approx ? exact - approx : approx - exact;
}

double nmed(double med, int width) {
  const double max_out = static_cast<double>((uint64_t{1} << width) - 1);
  return med / (max_out * max_out);
}

uint64_t sample_stream(uint64_t seed, uint64_t index) {
  uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct ChunkTally {
  uint64_t err_pairs = 0;
  uint64_t sum_ed = 0;
  uint64_t max_ed = 0;
  uint64_t skipped = 0;
  double red_sum = 0.0;
};

// Runs fn(chunk_index) for chunks [0, n) across the given worker count.
// Each chunk is owned by exactly one worker, so per-chunk results do not
// depend on the partitioning.
template <typename Fn>
void for_each_chunk(uint64_t chunks, int workers, Fn fn) {
  workers = std::max(1, workers);
  if (workers == 1 || chunks <= 1) {
    for (uint64_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<uint64_t> next{0};
  auto body = [&] {
    for (;;) {
      const uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      fn(c);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(
      std::min<uint64_t>(static_cast<uint64_t>(workers), chunks));
  pool.reserve(static_cast<size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
}

ErrorReport finalize(const Multiplier& m, std::vector<ChunkTally> tallies,
                     uint64_t total, const EvalOptions& opts) {
  ErrorReport r;
  r.name = m.name();
  r.total_pairs = total;
  double red_sum = 0.0;
  // Chunk order is fixed, so the float reduction is reproducible.
  for (const ChunkTally& t : tallies) {
    r.err_pairs += t.err_pairs;
    r.sum_ed += t.sum_ed;
    r.max_ed = std::max(r.max_ed, t.max_ed);
    r.mred_skipped += t.skipped;
    red_sum += t.red_sum;
  }
  r.er = static_cast<double>(r.err_pairs) / static_cast<double>(total);
  r.med = static_cast<double>(r.sum_ed) / static_cast<double>(total);
  r.nmed = nmed(r.med, m.width());
  uint64_t red_count = total;
  if (opts.zero_policy == MredZeroPolicy::Skip) red_count -= r.mred_skipped;
  r.mred = red_count == 0 ? 0.0 : red_sum / static_cast<double>(red_count);
  return r;
}

void tally_pair(ChunkTally& t, uint64_t exact, uint64_t approx) {
  const uint64_t dist = ed(exact, approx);
  if (dist != 0) ++t.err_pairs;
  t.sum_ed += dist;
  t.max_ed = std::max(t.max_ed, dist);
  if (exact == 0)
    ++t.skipped;
  else
    t.red_sum += static_cast<double>(dist) / static_cast<double>(exact);
}

}  // namespace

ErrorReport eval_exhaustive(const Multiplier& m, const EvalOptions& opts) {
  const int w = m.width();
  if (w > 12)
    throw std::invalid_argument("exhaustive sweep limited to width 12");
  const uint64_t side = uint64_t{1} << w;
  std::vector<ChunkTally> tallies(static_cast<size_t>(side));
  for_each_chunk(side, opts.workers, [&](uint64_t a) {
    ChunkTally& t = tallies[static_cast<size_t>(a)];
    for (uint64_t b = 0; b < side; ++b)
      tally_pair(t, a * b, m.mul(a, b));
  });
  ErrorReport r = finalize(m, std::move(tallies), side * side, opts);
  r.mode = EvalMode::Exhaustive;
  return r;
}

ErrorReport eval_sampled(const Multiplier& m, uint64_t n, uint64_t seed,
                         const EvalOptions& opts) {
  if (n == 0) throw std::invalid_argument("sample count must be positive");
  const int w = m.width();
  const uint64_t operand_mask = (uint64_t{1} << w) - 1;
  constexpr uint64_t kChunk = 1 << 16;
  const uint64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<ChunkTally> tallies(static_cast<size_t>(chunks));
  for_each_chunk(chunks, opts.workers, [&](uint64_t c) {
    ChunkTally& t = tallies[static_cast<size_t>(c)];
    const uint64_t end = std::min(n, (c + 1) * kChunk);
    for (uint64_t i = c * kChunk; i < end; ++i) {
      const uint64_t r = sample_stream(seed, i);
      const uint64_t a = r & operand_mask;
      const uint64_t b = (r >> w) & operand_mask;
      tally_pair(t, a * b, m.mul(a, b));
    }
  });
  ErrorReport r = finalize(m, std::move(tallies), n, opts);
  r.mode = EvalMode::Sampled;
  r.sample_count = n;
  r.seed = seed;
  return r;
}

}  // namespace axmul
