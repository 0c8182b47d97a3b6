#pragma once

#include <cmath>
#include <cstdint>

#include "plqi/types.hpp"

namespace plqi {

// Deterministic splittable RNG (splitmix64). Every randomized procedure in
// the library draws from a substream keyed by (seed, item index), so results
// do not depend on evaluation order or thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    // Mix the index through one splitmix step before combining so that
    // (seed, i) and (seed + 1, i - 1) do not collide.
    Rng ix(index + 0x9e3779b97f4a7c15ull);
    return Rng(seed ^ ix.next_u64());
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
  }

  int uniform_int(int n) {  // 0 .. n-1
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  double gaussian() {
    // Box-Muller; one value per call keeps the stream layout simple.
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Vec gaussian_vector(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  Vec unit_vector(int n) {
    for (;;) {
      Vec v = gaussian_vector(n);
      const double norm = v.norm();
      if (norm > 1e-12) return v / norm;
    }
  }

  // Uniform by volume in the ball of the given radius around center.
  Vec in_ball(const Vec& center, double radius) {
    const int n = static_cast<int>(center.size());
    const double r = radius * std::pow(uniform(), 1.0 / n);
    return center + r * unit_vector(n);
  }

  // Uniform by volume in the shell r0 <= |x - center| <= r1.
  Vec in_shell(const Vec& center, double r0, double r1) {
    const int n = static_cast<int>(center.size());
    const double a = std::pow(r0, n);
    const double b = std::pow(r1, n);
    const double r = std::pow(a + uniform() * (b - a), 1.0 / n);
    return center + r * unit_vector(n);
  }

  // Uniform over the standard k-simplex (Dirichlet(1,...,1)) via
  // exponential spacings.
  Vec dirichlet_uniform(int k) {
    Vec w(k);
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
      double u = uniform();
      if (u < 1e-300) u = 1e-300;
      w[i] = -std::log(u);
      total += w[i];
    }
    return w / total;
  }

 private:
  std::uint64_t state_;
};

}  // namespace plqi
