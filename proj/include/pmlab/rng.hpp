#pragma once

#include <cmath>
#include <cstdint>

namespace pmlab {

// Counter-based stream: every draw is a pure function of (key, counter), so
// streams addressed by (seed, id0, id1, id2) reproduce bit-identically no
// matter how work is scheduled across threads. A stream must have a single
// owner; copy it to fork (copies diverge only if advanced differently).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t id0 = 0,
                     std::uint64_t id1 = 0, std::uint64_t id2 = 0) {
    key_ = mix(seed ^ 0x2545F4914F6CDD1DULL);
    key_ = mix(key_ + mix(id0 + 0x9E3779B97F4A7C15ULL));
    key_ = mix(key_ + mix(id1 + 0xD1B54A32D192ED03ULL));
    key_ = mix(key_ + mix(id2 + 0x8CB92BA72F3D8DD7ULL));
  }

  std::uint64_t next_u64() {
    std::uint64_t z = key_ + (counter_++) * 0x9E3779B97F4A7C15ULL;
    return mix(z);
  }

  // uniform on (0,1); never returns 0 or 1
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // standard normal, Box-Muller (pairs cached)
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  // gamma(shape, rate), Marsaglia-Tsang for shape >= 1 with boosting below 1
  double gamma(double shape, double rate) {
    if (shape < 1.0) {
      double u = uniform();
      return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      double u = uniform();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
        return d * v / rate;
      }
    }
  }

  double chi_squared(double dof) { return gamma(0.5 * dof, 0.5); }

  // Student-t with location/scale
  double student_t(double nu, double loc, double scale) {
    double z = normal();
    double g = chi_squared(nu);
    return loc + scale * z / std::sqrt(g / nu);
  }

  // uniform integer on [0, n)
  std::uint64_t uniform_int(std::uint64_t n) {
    // rejection to kill modulo bias
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace pmlab
