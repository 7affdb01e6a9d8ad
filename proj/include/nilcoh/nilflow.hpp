#pragma once

#include "nilcoh/bch.hpp"
#include "nilcoh/lie_algebra.hpp"

#include <complex>
#include <functional>
#include <vector>

// The flow φ_X^t(Γx) = Γx exp(tX) on Γ\N, with Γ generated by exp(E_i) for a
// strongly based Malcev basis. Points are stored in second-kind coordinates
// reduced to [0, 1)^d.

namespace nilcoh {

struct NilPoint {
  Eigen::VectorXd coords;
};

/// Observables: a constant, a finite sum Σ c_j χ_{M_j}∘p of torus characters
/// pulled back by the projection p onto the first-layer torus, the
/// derivative X(Σ c_j χ_{M_j}∘p) of such a sum, or an arbitrary function
/// with a declared frequency bound.
class Observable {
 public:
  enum class Kind { constant, characters, coboundary, custom };
  struct Term {
    std::vector<long> m;
    std::complex<double> c;
  };

  static Observable constant();
  static Observable character(std::vector<long> m);
  static Observable characters(std::vector<Term> terms);
  /// X u for u = Σ c_j χ_{M_j}∘p.
  static Observable coboundary(std::vector<Term> potential);
  /// Integrated with 8-point Gauss–Legendre per step; the frequency bound
  /// feeds the resolution guard.
  static Observable custom(std::function<std::complex<double>(const NilPoint&)> f, double frequency_bound);

  Kind kind() const { return kind_; }
  const std::vector<Term>& terms() const { return terms_; }

  std::complex<double> operator()(const NilPoint& x, const Eigen::VectorXd& omega) const;
  /// u(x) for a coboundary observable Xu.
  std::complex<double> potential(const NilPoint& x) const;
  /// Σ |c_j|, an upper bound for sup |u|.
  double potential_sup_bound() const;
  double max_frequency(const Eigen::VectorXd& omega) const;

 private:
  Kind kind_ = Kind::constant;
  std::vector<Term> terms_;
  std::function<std::complex<double>(const NilPoint&)> custom_;
  double custom_bandwidth_ = 0.0;
};

struct EquidistributionRow {
  std::vector<long> m;
  double t = 0.0;
  double frequency = 0.0;  // ⟨M, Ω⟩
  std::complex<double> measured;
  std::complex<double> closed_form;
  double error = 0.0;
  /// 1/(πT|⟨M,Ω⟩|), infinite when the frequency vanishes.
  double bound = 0.0;
  bool pass = false;
};

class NilflowSimulator {
 public:
  /// Throws UnsupportedStep beyond step 4.
  explicit NilflowSimulator(const AlgebraQ& algebra);

  const AlgebraD& algebra() const { return alg_; }
  int dim() const { return alg_.dim(); }

  /// Γ-coset representative in [0, 1)^d, reducing the shallowest coordinate
  /// first: left multiplication by exp(k E_i) shifts s_i by k and only
  /// touches deeper coordinates.
  NilPoint reduce(const Eigen::VectorXd& coords) const;

  NilPoint flow_step(const NilPoint& x, const Eigen::VectorXd& X, double t) const;

  /// sup-norm of the second-kind coordinates of γ y x^{−1} with γ ∈ Γ chosen
  /// coordinate by coordinate to round to the nearest lattice point.
  double coset_distance(const NilPoint& x, const NilPoint& y) const;

  /// det of the derivative of s ↦ coords(x(s) exp(tX)) by central differences.
  double jacobian_determinant(const Eigen::VectorXd& coords, const Eigen::VectorXd& X, double t,
                              double h = 1e-4) const;

  /// (1/T) ∫_0^T obs(φ^t x0) dt. Character-type observables are integrated
  /// in closed form over each step; custom ones by Gauss–Legendre. Throws
  /// UnderResolved when dt · max frequency > 1/2.
  std::complex<double> birkhoff_average(const NilPoint& x0, const Eigen::VectorXd& X, const Observable& obs, double T,
                                        double dt) const;

  /// One row per (M, T), M = 0 skipped.
  std::vector<EquidistributionRow> equidistribution_report(const NilPoint& x0, const Eigen::VectorXd& X,
                                                           const std::vector<std::vector<long>>& ms,
                                                           const std::vector<double>& ts, double dt,
                                                           double tolerance = 1e-10) const;

  /// First-layer coordinates; along an orbit they move by tΩ_X.
  Eigen::VectorXd torus_coordinates(const NilPoint& x) const;

 private:
  Eigen::VectorXd to_log(const Eigen::VectorXd& s) const;
  Eigen::VectorXd from_log(const Eigen::VectorXd& z) const;
  Eigen::VectorXd reduce_with(const Eigen::VectorXd& coords, bool nearest) const;

  AlgebraD alg_;
};

}  // namespace nilcoh
