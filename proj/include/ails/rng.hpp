#ifndef AILS_RNG_HPP
#define AILS_RNG_HPP

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace ails {

// Single random stream per run. The distribution helpers are implemented
// here (not via std::*_distribution) so that a fixed seed yields the same
// draw sequence on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [lo, hi], both ends included.
  int uniform_int(int lo, int hi) {
    assert(lo <= hi);
    return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Index drawn proportionally to the (non-negative) weights.
  int pick_weighted(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    assert(total > 0.0);
    double x = uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (x < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
  }

  // k distinct values from [0, n), in draw order (partial Fisher-Yates).
  std::vector<int> sample_distinct(int n, int k) {
    assert(0 <= k && k <= n);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
      int j = uniform_int(i, n - 1);
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      int j = uniform_int(0, i);
      std::swap(v[i], v[j]);
    }
  }

 private:
  // Unbiased bounded draw (multiply-shift with rejection).
  std::uint64_t bounded(std::uint64_t span) {
    assert(span > 0);
    if ((span & (span - 1)) == 0) return engine_() & (span - 1);
    std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % span;
  }

  std::mt19937_64 engine_;
};

}  // namespace ails

#endif
