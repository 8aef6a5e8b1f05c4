#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace sic {

/// splitmix64 mixing step; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Deterministic random stream. The engine (mt19937_64) and every sampler
/// below are fully specified here, so sequences are identical across
/// platforms and independent of how runs are scheduled onto workers: stream i
/// of a base seed always produces the same draws.
class Rng {
 public:
  explicit Rng(std::uint64_t base_seed, std::uint64_t stream = 0)
      : engine_(splitmix64(splitmix64(base_seed) ^ splitmix64(~stream))) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in {0, ..., n-1}.
  int uniform_int(int n) {
    if (n <= 0) throw std::invalid_argument("uniform_int: n must be positive");
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  /// Exponential with mean 1.
  double exponential() { return -std::log1p(-next_unit()); }

  /// Poisson sample by Knuth's product method; large means split in halves
  /// to keep exp(-mean) in normal double range.
  int poisson(double mean) {
    if (mean < 0) throw std::invalid_argument("poisson: negative mean");
    if (mean == 0) return 0;
    if (mean > 60.0) return poisson(mean / 2) + poisson(mean - mean / 2);
    const double limit = std::exp(-mean);
    int count = -1;
    double product = 1.0;
    do {
      product *= next_unit();
      ++count;
    } while (product > limit);
    return count;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sic
