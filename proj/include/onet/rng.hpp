#pragma once

// Deterministic RNG: splitmix64.  One seed, one stream, bit-exact integer
// arithmetic everywhere; doubles come from filling the 53-bit mantissa.
// Every randomized component takes an explicit seed so trials can be
// replayed and run order-independently.

#include <cstdint>
#include <cmath>

namespace onet {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo,hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  bool bernoulli(double p) { return next_double() < p; }

  // uniform integer in [0,n); n>0.  Modulo bias is irrelevant at our scales
  // but cheap to remove, so remove it.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // standard normal via Box-Muller; goes through libm, so bit-exact only
  // per-platform (sufficient: determinism checks re-run on one machine)
  double gaussian() {
    if (have_spare_) { have_spare_ = false; return spare_; }
    double u1 = next_double(), u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.28318530717958647692 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stable derivation of sub-seeds (per trial, per net attempt, ...) so that
// trial i's stream never depends on whether trial i-1 ran.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
  Rng r(base ^ (salt * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
  return r.next_u64();
}

}  // namespace onet
