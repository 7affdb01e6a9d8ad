#pragma once

#include "nilcoh/bch.hpp"
#include "nilcoh/lattice.hpp"
#include "nilcoh/lie_algebra.hpp"
#include "nilcoh/linalg.hpp"

#include <array>
#include <cmath>
#include <vector>

// Linear forms are coordinate vectors in the dual Malcev basis: λ(x) = λ · x.

namespace nilcoh {

template <class Scalar>
using LinearForm = VectorX<Scalar>;

/// B_λ(x, y) = λ([x, y]).
template <class Scalar>
Scalar b_form(const NilpotentLieAlgebra<Scalar>& alg, const LinearForm<Scalar>& lambda, const VectorX<Scalar>& x,
              const VectorX<Scalar>& y) {
  return lambda.dot(alg.bracket(x, y));
}

/// The Gram matrix (B_λ(E_i, E_j)).
template <class Scalar>
MatrixX<Scalar> b_matrix(const NilpotentLieAlgebra<Scalar>& alg, const LinearForm<Scalar>& lambda) {
  MatrixX<Scalar> b(alg.dim(), alg.dim());
  for (int i = 0; i < alg.dim(); ++i) b.row(i) = (alg.ad_basis(i).transpose() * lambda).transpose();
  return b;
}

/// λ ∘ Ad(exp(−g)); exact for every step since Ad is a finite sum.
template <class Scalar>
LinearForm<Scalar> coadjoint_act(const NilpotentLieAlgebra<Scalar>& alg, const VectorX<Scalar>& g,
                                 const LinearForm<Scalar>& lambda) {
  return adjoint_action<Scalar>(alg, VectorX<Scalar>(-g)).transpose() * lambda;
}

/// n_{k−1}; for an abelian algebra this is taken to be n itself.
template <class Scalar>
const MatrixX<Scalar>& penultimate_series_term(const NilpotentLieAlgebra<Scalar>& alg) {
  return alg.series_term(std::max(alg.step() - 1, 1));
}

/// Squared euclidean norm of the restriction of the functional v · (−) to
/// span(basis).
template <class Scalar>
Scalar restricted_norm_squared(const MatrixX<Scalar>& basis, const VectorX<Scalar>& v) {
  if (basis.cols() == 0) return Scalar(0);
  return v.dot(orthogonal_projector<Scalar>(basis) * v);
}

template <class Scalar>
double sqrt_to_double(const Scalar& x) {
  return std::sqrt(to_double(x));
}

template <class Scalar>
struct OrbitInvariants {
  MatrixX<Scalar> b_matrix;
  MatrixX<Scalar> radical_basis;
  MatrixX<Scalar> nk1_perp_basis;
  /// The three equivalent characterizations of non maximal rank, evaluated
  /// independently: λ|n_k = 0, n_{k−1}^⊥ = n, and n_{k−1}^⊥ projecting onto n/n_2.
  std::array<bool, 3> degenerate_conditions;
  bool maximal_rank;
  Scalar w_k_squared;
  Scalar w_z_squared;
  double w_k;
  double w_z;
  /// B_λ(X, E_j) for the basis vectors E_j spanning n_{k−1}, with their indices.
  std::vector<std::pair<int, Scalar>> b_x_per_basis;
  Scalar delta_squared;
  double delta;
};

/// r_λ = {T : B_λ(T, n) = 0}.
template <class Scalar>
MatrixX<Scalar> radical(const NilpotentLieAlgebra<Scalar>& alg, const LinearForm<Scalar>& lambda) {
  return nullspace<Scalar>(b_matrix(alg, lambda));
}

/// n_{k−1}^⊥(λ) = {T : B_λ(T, n_{k−1}) = 0}.
template <class Scalar>
MatrixX<Scalar> nk1_perp(const NilpotentLieAlgebra<Scalar>& alg, const LinearForm<Scalar>& lambda) {
  const MatrixX<Scalar> b = b_matrix(alg, lambda);
  const MatrixX<Scalar> constraints = (b * penultimate_series_term(alg)).transpose();
  return nullspace<Scalar>(constraints);
}

/// The functional Y ↦ B_λ(X, Y) as a coordinate vector.
template <class Scalar>
VectorX<Scalar> b_x_functional(const NilpotentLieAlgebra<Scalar>& alg, const LinearForm<Scalar>& lambda,
                               const VectorX<Scalar>& x) {
  return alg.ad(x).transpose() * lambda;
}

template <class Scalar>
OrbitInvariants<Scalar> orbit_invariants(const NilpotentLieAlgebra<Scalar>& alg, const LinearForm<Scalar>& lambda,
                                         const VectorX<Scalar>& x) {
  if (lambda.size() != alg.dim())
    throw Error(ErrorKind::dimension_mismatch, "linear form has length " + std::to_string(lambda.size()) +
                                                   ", algebra has dimension " + std::to_string(alg.dim()));
  OrbitInvariants<Scalar> out;
  out.b_matrix = b_matrix(alg, lambda);
  out.radical_basis = nullspace<Scalar>(out.b_matrix);
  out.nk1_perp_basis = nk1_perp(alg, lambda);

  const MatrixX<Scalar>& nk = alg.series_term(alg.step());
  out.w_k_squared = restricted_norm_squared<Scalar>(nk, lambda);
  out.w_z_squared = restricted_norm_squared<Scalar>(alg.center(), lambda);
  out.w_k = sqrt_to_double(out.w_k_squared);
  out.w_z = sqrt_to_double(out.w_z_squared);

  out.degenerate_conditions[0] = is_zero_matrix(MatrixX<Scalar>(nk.transpose() * lambda));
  out.degenerate_conditions[1] = out.nk1_perp_basis.cols() == alg.dim();
  // The projection to n/n_2 is onto iff perp + n_2 = n.
  out.degenerate_conditions[2] =
      rank<Scalar>(hstack<Scalar>(out.nk1_perp_basis, alg.series_term(std::min(2, alg.step() + 1)))) == alg.dim();
  out.maximal_rank = alg.step() >= 2 && !out.degenerate_conditions[0];

  const VectorX<Scalar> v = b_x_functional(alg, lambda, x);
  const int first = alg.step() >= 2 ? alg.layer_offset(alg.step() - 1) : 0;
  for (int j = first; j < alg.dim(); ++j) out.b_x_per_basis.emplace_back(j, v(j));
  out.delta_squared = restricted_norm_squared<Scalar>(penultimate_series_term(alg), v);
  out.delta = sqrt_to_double(out.delta_squared);
  return out;
}

/// Restriction of B_λ to a subspace has radical {T ∈ V : B_λ(T, V) = 0}.
template <class Scalar>
MatrixX<Scalar> restricted_radical(const MatrixX<Scalar>& b, const MatrixX<Scalar>& subspace) {
  if (subspace.cols() == 0) return subspace;
  const MatrixX<Scalar> gram = subspace.transpose() * b * subspace;
  return subspace * nullspace<Scalar>(gram);
}

/// Polarizing subalgebra m = Σ_j r(λ | g_j) over the flag of ideals
/// g_j = span(E_{d−j}, ..., E_d).
template <class Scalar>
MatrixX<Scalar> polarizing_subalgebra(const NilpotentLieAlgebra<Scalar>& alg, const LinearForm<Scalar>& lambda) {
  const int d = alg.dim();
  const MatrixX<Scalar> b = b_matrix(alg, lambda);
  MatrixX<Scalar> m(d, 0);
  for (int j = 1; j <= d; ++j) {
    MatrixX<Scalar> g = MatrixX<Scalar>::Zero(d, j);
    for (int c = 0; c < j; ++c) g(d - j + c, c) = Scalar(1);
    m = subspace_sum<Scalar>(m, restricted_radical<Scalar>(b, g));
  }

  const Eigen::Index expected = d - rank<Scalar>(b) / 2;
  if (m.cols() != expected)
    throw Error(ErrorKind::internal, "polarizing subalgebra has dimension " + std::to_string(m.cols()) +
                                         ", expected " + std::to_string(expected));
  if (!is_zero_matrix(MatrixX<Scalar>(m.transpose() * b * m)))
    throw Error(ErrorKind::internal, "polarizing subalgebra is not isotropic");
  for (Eigen::Index i = 0; i < m.cols(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (!span_contains<Scalar>(m, alg.bracket(m.col(i), m.col(j))))
        throw Error(ErrorKind::internal, "polarizing subalgebra is not closed under the bracket");
  if (!is_subspace<Scalar>(nullspace<Scalar>(b), m))
    throw Error(ErrorKind::internal, "polarizing subalgebra does not contain the radical");
  return m;
}

/// λ(E) ∈ ℤ for every E in log Z(Γ). Requires the centre to be spanned by
/// central Malcev basis vectors, so that log Z(Γ) is their integer span;
/// throws ErrorKind::unsupported_algebra otherwise.
bool weakly_integral(const LatticeData& lattice, const LinearForm<Rational>& lambda);

/// Multiplicity of π_m in L²(Γ\N) for the standard Heisenberg lattice,
/// counted as the closed orbits xM, x = exp(s E1) with s ∈ [0, 1), on which
/// the character exp(2πi λ) is trivial on the stabilizer.
long heisenberg_multiplicity(const LatticeData& lattice, long m);

}  // namespace nilcoh
