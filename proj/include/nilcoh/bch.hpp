#pragma once

#include "nilcoh/errors.hpp"
#include "nilcoh/lie_algebra.hpp"

// Group law of the simply connected group N = exp(n) in exponential
// coordinates, and conversion to Malcev coordinates of the second kind
// x = exp(s_1 E_1) exp(s_2 E_2) ... exp(s_d E_d).

namespace nilcoh {

inline constexpr int max_bch_step = 4;

template <class Scalar>
void require_bch_step(const NilpotentLieAlgebra<Scalar>& alg) {
  if (alg.step() > max_bch_step)
    throw Error(ErrorKind::unsupported_step, "the group law is implemented for step <= 4, algebra has step " +
                                                 std::to_string(alg.step()));
}

/// log(exp x exp y), truncated at bracket length 4.
template <class Scalar>
VectorX<Scalar> bch_multiply(const NilpotentLieAlgebra<Scalar>& alg, const VectorX<Scalar>& x,
                             const VectorX<Scalar>& y) {
  require_bch_step(alg);
  VectorX<Scalar> z = x + y;
  if (alg.step() == 1) return z;
  const VectorX<Scalar> xy = alg.bracket(x, y);
  z += xy / Scalar(2);
  if (alg.step() == 2) return z;
  const VectorX<Scalar> xxy = alg.bracket(x, xy);
  const VectorX<Scalar> yxy = alg.bracket(y, xy);
  z += (xxy - yxy) / Scalar(12);
  if (alg.step() == 3) return z;
  z -= alg.bracket(y, xxy) / Scalar(24);
  return z;
}

/// Matrix of Ad(exp x) = exp(ad x), a finite sum by nilpotency.
template <class Scalar>
MatrixX<Scalar> adjoint_action(const NilpotentLieAlgebra<Scalar>& alg, const VectorX<Scalar>& x) {
  const MatrixX<Scalar> a = alg.ad(x);
  MatrixX<Scalar> term = MatrixX<Scalar>::Identity(alg.dim(), alg.dim());
  MatrixX<Scalar> out = term;
  for (int j = 1; j <= alg.step(); ++j) {
    term = (a * term) / Scalar(j);
    out += term;
  }
  return out;
}

/// log(exp x exp y exp(-x) exp(-y)).
template <class Scalar>
VectorX<Scalar> group_commutator(const NilpotentLieAlgebra<Scalar>& alg, const VectorX<Scalar>& x,
                                 const VectorX<Scalar>& y) {
  return bch_multiply(alg, bch_multiply(alg, x, y), bch_multiply<Scalar>(alg, -x, -y));
}

/// Exponential coordinates of exp(s_1 E_1) ... exp(s_d E_d).
template <class Scalar>
VectorX<Scalar> log_from_second_kind(const NilpotentLieAlgebra<Scalar>& alg, const VectorX<Scalar>& s) {
  VectorX<Scalar> z = VectorX<Scalar>::Zero(alg.dim());
  for (int i = 0; i < alg.dim(); ++i)
    if (s(i) != Scalar(0)) z = bch_multiply<Scalar>(alg, z, s(i) * alg.basis_vector(i));
  return z;
}

/// Inverse of log_from_second_kind. Peeling exp(s_i E_i) off the left only
/// changes coordinates deeper than i, by the flag property.
template <class Scalar>
VectorX<Scalar> second_kind_from_log(const NilpotentLieAlgebra<Scalar>& alg, const VectorX<Scalar>& z) {
  VectorX<Scalar> rest = z;
  VectorX<Scalar> s = VectorX<Scalar>::Zero(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    s(i) = rest(i);
    if (s(i) != Scalar(0)) rest = bch_multiply<Scalar>(alg, VectorX<Scalar>(-s(i) * alg.basis_vector(i)), rest);
    rest(i) = Scalar(0);
  }
  return s;
}

}  // namespace nilcoh
