#pragma once

#include "nilcoh/lie_algebra.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string_view>
#include <vector>

// Finite-range certification of |⟨M, Ω⟩| ≥ K / |M|^{n−1+τ} for integer M ≠ 0,
// with |M| the max-norm.

namespace nilcoh {

/// Unevaluated sum hi + lo with |lo| ≤ ulp(hi)/2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  static DoubleDouble product(double a, double b);
  DoubleDouble operator+(const DoubleDouble& other) const;
  double value() const { return hi + lo; }
  bool is_zero() const { return hi == 0.0 && lo == 0.0; }
};

/// Ω_X: the first-layer Malcev coordinates of X.
Eigen::VectorXd frequency_vector(const AlgebraD& alg, const Eigen::VectorXd& x);
VectorQ frequency_vector(const AlgebraQ& alg, const VectorQ& x);

/// Frequencies as given by the user. When every entry is rational the exact
/// copy is kept and relation detection is done in exact arithmetic.
struct FrequencyInput {
  Eigen::VectorXd values;
  std::optional<VectorQ> exact;

  static FrequencyInput from_double(Eigen::VectorXd values);
  static FrequencyInput from_rational(const VectorQ& values);

  /// Comma separated entries, each a rational or decimal, `phi`, `pi`, `e`,
  /// `sqrt(r)` for rational r ≥ 0, or `liouville(J)` = Σ_{j=1}^J 10^{−j!}.
  static FrequencyInput parse(std::string_view text);
};

struct ShellRecord {
  long shell = 0;
  /// min |⟨M, Ω⟩| over |M|_∞ = shell
  double minimum = 0.0;
  /// minimum · shell^{n−1+τ}
  double scaled = 0.0;
  std::vector<long> witness;
};

struct ContinuedFractionCheck {
  std::vector<long> partial_quotients;
  /// Convergents p/q of ω₂/ω₁ with q ≤ M_max, as (p, q).
  std::vector<std::pair<long, long>> convergents;
  /// Witnesses at which min_{|M| ≤ r} |⟨M, Ω⟩| strictly drops, as r grows.
  std::vector<std::vector<long>> record_witnesses;
  bool agrees = false;
};

struct DiophantineReport {
  Eigen::VectorXd omega;
  double tau = 0.0;
  long m_max = 0;
  double k_best = 0.0;
  std::vector<long> witness;
  bool irrational = true;
  std::vector<ShellRecord> shells;
  /// First shell whose scaled minimum drops below a fifth of the running
  /// minimum over the smaller shells.
  std::optional<long> collapse_shell;
  /// Two frequencies only.
  std::optional<ContinuedFractionCheck> continued_fraction;
};

/// Exhaustive scan of the shells 1 ≤ |M|_∞ ≤ M_max. Throws
/// ErrorKind::rational_relation when ⟨M, Ω⟩ = 0 for some M in range.
DiophantineReport certify(const FrequencyInput& omega, double tau, long m_max);

struct RelationResult {
  bool irrational = true;
  std::vector<long> witness;  // normalized: first nonzero entry positive
};

/// False iff some 0 < |M|_∞ ≤ M_max has ⟨M, Ω⟩ = 0 exactly (in exact
/// arithmetic for rational input, in double-double otherwise).
RelationResult is_irrational_in_range(const FrequencyInput& omega, long m_max);

/// Continued fraction partial quotients of x > 0, stopping once the
/// convergent denominator passes max_denominator.
ContinuedFractionCheck continued_fraction(double x, long max_denominator);

}  // namespace nilcoh
