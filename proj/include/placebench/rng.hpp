#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace placebench {

// Seedable generator with portable derived draws. mt19937_64 raw output is
// specified bit-for-bit by the standard; the bounded/real helpers below avoid
// std::uniform_*_distribution, whose sequences differ across standard
// libraries. Every randomized stage takes one of these so that a (config,
// seed) pair reproduces byte-identical artifacts anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n). Rejection sampling keeps the draw unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  // Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + long(below(std::uint64_t(hi - lo + 1)));
  }

  // Uniform in [0, 1).
  double real01() { return double(engine_() >> 11) * 0x1.0p-53; }

  double real(double lo, double hi) { return lo + (hi - lo) * real01(); }

  bool chance(double p) { return real01() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = std::size_t(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[std::size_t(below(v.size()))];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace placebench
