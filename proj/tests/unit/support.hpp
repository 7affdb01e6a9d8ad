#pragma once

#include "nilcoh/lie_algebra.hpp"
#include "nilcoh/rational.hpp"

#include <random>

namespace nilcoh::testing {

inline AlgebraQ heisenberg() { return AlgebraQ(3, {2, 1}, {{0, 1, 2, Rational(1)}}, {}, "heisenberg"); }

inline AlgebraQ filiform4() {
  return AlgebraQ(4, {2, 1, 1}, {{0, 1, 2, Rational(1)}, {0, 2, 3, Rational(1)}}, {}, "filiform4");
}

/// h3 + R with the extra central generator placed in the first layer.
inline AlgebraQ heisenberg_plus_line() { return AlgebraQ(4, {3, 1}, {{0, 1, 3, Rational(1)}}, {}, "h3r"); }

inline AlgebraQ abelian(int d) { return AlgebraQ(d, {d}, {}, {}, "abelian"); }

inline VectorQ vec(std::initializer_list<Rational> values) {
  VectorQ v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

inline Rational q(long p, long d = 1) { return Rational(p, d); }

class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed, long max_num = 5, long max_den = 4)
      : rng_(seed), num_(-max_num, max_num), den_(1, max_den) {}

  Rational operator()() { return Rational(num_(rng_), den_(rng_)); }

  VectorQ vector(int d) {
    VectorQ v(d);
    for (int i = 0; i < d; ++i) v(i) = (*this)();
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> num_;
  std::uniform_int_distribution<long> den_;
};

inline Eigen::VectorXd random_unit_interval(std::mt19937_64& rng, int d, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::VectorXd v(d);
  for (int i = 0; i < d; ++i) v(i) = u(rng);
  return v;
}

}  // namespace nilcoh::testing

#include <cmath>
#include <vector>

namespace nilcoh::testing {

/// Eigenvalues λ_0 ≤ ... ≤ λ_{count−1} of the symmetric tridiagonal matrix with
/// diagonal a and off-diagonal b, by Sturm-count bisection.
inline std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& a, const std::vector<double>& b,
                                                   int count) {
  double lo = a[0], hi = a[0];
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double r = (i > 0 ? std::abs(b[i - 1]) : 0.0) + (i + 1 < a.size() ? std::abs(b[i]) : 0.0);
    lo = std::min(lo, a[i] - r);
    hi = std::max(hi, a[i] + r);
  }
  // Number of eigenvalues below x.
  auto below = [&](double x) {
    int n = 0;
    double d = a[0] - x;
    if (d < 0) ++n;
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (d == 0.0) d = 1e-300;
      d = a[i] - x - b[i - 1] * b[i - 1] / d;
      if (d < 0) ++n;
    }
    return n;
  };
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    double l = lo, h = hi;
    for (int it = 0; it < 200 && h - l > 1e-14 * std::max(1.0, std::abs(h)); ++it) {
      const double mid = 0.5 * (l + h);
      if (below(mid) > k) h = mid;
      else l = mid;
    }
    out.push_back(0.5 * (l + h));
  }
  return out;
}

/// Lowest eigenvalues of −d²/dt² + 4π²m²t² + 4π²m² by second-order finite
/// differences on [−R, R] with Dirichlet ends, Richardson-extrapolated from
/// steps h and h/2.
inline std::vector<double> fd_heisenberg_laplacian(double m, int count, double h = 2e-3) {
  const double pi = 3.14159265358979323846;
  const double omega = 2.0 * pi * std::abs(m);
  const double half_width = (std::sqrt(2.0 * count + 1.0) + 9.0) / std::sqrt(omega);
  auto run = [&](double step) {
    const int n = static_cast<int>(std::ceil(2.0 * half_width / step)) - 1;
    const double hs = 2.0 * half_width / (n + 1);
    std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n - 1), -1.0 / (hs * hs));
    for (int i = 0; i < n; ++i) {
      const double t = -half_width + (i + 1) * hs;
      a[static_cast<std::size_t>(i)] = 2.0 / (hs * hs) + omega * omega * t * t + 4.0 * pi * pi * m * m;
    }
    return tridiagonal_eigenvalues(a, b, count);
  };
  const double scaled = h / std::sqrt(omega);
  const std::vector<double> coarse = run(scaled), fine = run(scaled / 2);
  std::vector<double> out;
  for (int k = 0; k < count; ++k)
    out.push_back((4.0 * fine[static_cast<std::size_t>(k)] - coarse[static_cast<std::size_t>(k)]) / 3.0);
  return out;
}

}  // namespace nilcoh::testing
