#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace japprox {

/// Worker count: hardware concurrency capped by JULIA_APPROX_THREADS (>=1).
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("JULIA_APPROX_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return hw;
}

/// Runs fn(begin, end) over disjoint chunks of [0, n).  Chunk boundaries are a
/// pure function of n and the worker count, so per-chunk results can be
/// reduced in chunk order for deterministic output.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  unsigned workers = worker_count();
  if (n == 0) return;
  if (workers <= 1 || n < 2 * workers) {
    fn(0, n);
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t b = 0; b < n; b += chunk) {
    std::size_t e = std::min(n, b + chunk);
    pool.emplace_back(fn, b, e);
  }
  for (auto& t : pool) t.join();
}

/// Deterministic chunked max-reduction: applies score(i) over [0, n) and
/// returns (best index, best value); ties resolved toward the smaller index.
template <typename Score>
std::pair<std::size_t, double> parallel_argmax(std::size_t n, Score score) {
  unsigned workers = worker_count();
  std::size_t chunk = (workers <= 1) ? n : (n + workers - 1) / workers;
  if (chunk == 0) chunk = n;
  std::vector<std::pair<std::size_t, double>> part;
  std::vector<std::size_t> begins;
  for (std::size_t b = 0; b < n; b += chunk) begins.push_back(b);
  part.resize(begins.size());
  parallel_for(begins.size(), [&](std::size_t cb, std::size_t ce) {
    for (std::size_t c = cb; c < ce; ++c) {
      std::size_t lo = begins[c], hi = std::min(n, begins[c] + chunk);
      std::size_t bi = lo;
      double bv = score(lo);
      for (std::size_t i = lo + 1; i < hi; ++i) {
        double v = score(i);
        if (v > bv) { bv = v; bi = i; }
      }
      part[c] = {bi, bv};
    }
  });
  std::pair<std::size_t, double> best = part[0];
  for (std::size_t c = 1; c < part.size(); ++c)
    if (part[c].second > best.second) best = part[c];
  return best;
}

/// xorshift-free uniform doubles from a splitmix64 stream: reproducible across
/// platforms, unlike std::uniform_real_distribution.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t state_;
};

} // namespace japprox
