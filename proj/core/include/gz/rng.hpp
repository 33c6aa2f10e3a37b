#ifndef GZ_RNG_HPP
#define GZ_RNG_HPP

#include <gz/rational.hpp>

#include <cstdint>
#include <stdexcept>

namespace gz {

/// Deterministic splitmix64 stream. The same seed yields the same draws on
/// every platform, which the reproducible verification suites rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("rng: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<long>(r % span);
  }

  /// Uniform nonzero integer in [lo, hi].
  long nonzero_uniform(long lo, long hi) {
    long v;
    do {
      v = uniform(lo, hi);
    } while (v == 0);
    return v;
  }

  /// Numerator uniform in [-num_abs, num_abs], denominator uniform in [1, den_max].
  Rational rational(long num_abs, long den_max) {
    return rat(uniform(-num_abs, num_abs), uniform(1, den_max));
  }

  /// Independent substream; used to parallelize trials deterministically.
  Rng child(std::uint64_t tag) const {
    Rng c(s_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
    c.next();
    return c;
  }

 private:
  std::uint64_t s_;
};

}  // namespace gz

#endif
