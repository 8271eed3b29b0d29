#pragma once

// Deterministic random draws on top of mt19937_64. std::uniform_real_distribution
// and std::normal_distribution are implementation-defined, which would break
// byte-identical traces across toolchains, so the transforms are fixed here.

#include <cmath>
#include <cstdint>
#include <random>

namespace sslb {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on (-1, 1); rejects exact 0 numerator so endpoints are open.
  double uniform_sym() {
    for (;;) {
      double u = 2.0 * uniform01() - 1.0;
      if (u > -1.0 && u < 1.0) return u;
    }
  }

  // Standard normal via Box-Muller; the pair partner is cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1, u2;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sslb
