#pragma once

#include "nilcoh/coadjoint.hpp"

#include <complex>
#include <vector>

namespace nilcoh {

/// Data of the realization of π_O on L²(ℝ, H′) in which π(X) = d/dt and
/// π(Y) = 2πi B_λ(X, Y) t. Exact quantities are kept as rationals; the unit
/// vectors Y and U are in general irrational and are stored in double along
/// with their exact unnormalized directions.
struct AdaptedRepData {
  VectorQ x;
  LinearForm<Rational> lambda;
  /// Unnormalized maximizer of |B_λ(X, ·)| on the unit sphere of n_{k−1}.
  VectorQ y_direction;
  Eigen::VectorXd y;
  /// B_λ(X, Y) for the unit Y; δ_O(X, Y) = δ_O(X) is its absolute value.
  double coupling;
  double delta;
  Rational delta_squared;
  MatrixQ nprime_basis;
  /// Coordinates of the functional T ↦ B_λ(T, Y_direction); U is its
  /// normalization, oriented so that ⟨X, U⟩ > 0.
  VectorQ normal_direction;
  Eigen::VectorXd u;
  double x_component;
  Rational x_component_squared;
  Rational t0;
  LinearForm<Rational> lambda_shifted;
  MatrixQ nk2_basis;
  Rational w_k_squared;
};

/// Throws ErrorKind::not_maximal_rank or ErrorKind::degenerate_direction.
AdaptedRepData build_adapted(const AlgebraQ& alg, const LinearForm<Rational>& lambda, const VectorQ& x);

struct SymbolTerm {
  int power;
  VectorQ coefficient;  // ad(X)^power E / power!
};

/// π_*(E) = Σ_j t^j π′_*(ad(X)^j E / j!) for E ∈ n′; trailing zero terms are
/// dropped. Throws ErrorKind::not_in_ideal for E outside n′.
std::vector<SymbolTerm> operator_symbol(const AlgebraQ& alg, const AdaptedRepData& rep, const VectorQ& e);

/// Coefficients p_j of the multiplier π_*(E) = p(t) = Σ_j p_j t^j, available
/// when every symbol coefficient lies in span(Y) ⊕ n_k, where π′ acts by the
/// scalar 2πi λ_shifted. Throws ErrorKind::not_scalar otherwise.
std::vector<std::complex<double>> scalar_multiplier(const AlgebraQ& alg, const AdaptedRepData& rep,
                                                    const VectorQ& e);

/// n̄′ = n′ / n_k″ with the induced form.
struct QuotientReduction {
  /// Representatives in n of a basis of n̄′.
  MatrixQ basis;
  /// structure[a](c, b) is the coefficient of basis c in [basis a, basis b].
  std::vector<MatrixQ> structure;
  VectorQ lambda_bar;
  VectorQ y_bar;
  bool y_central;
};

QuotientReduction quotient_reduction(const AlgebraQ& alg, const AdaptedRepData& rep);

/// Squared form of |⟨X,U⟩| · C · w_k ≥ δ_O(X, Y), with C² the sum of squared
/// structure constants pairing n with n_{k−1}. Returns lhs² − rhs² ≥ 0 when
/// the bound holds.
Rational xproj_margin_squared(const AlgebraQ& alg, const AdaptedRepData& rep);

}  // namespace nilcoh
