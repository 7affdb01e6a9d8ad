#include "nilcoh/coadjoint.hpp"

namespace nilcoh {

bool weakly_integral(const LatticeData& lattice, const LinearForm<Rational>& lambda) {
  const AlgebraQ& alg = *lattice.algebra;
  if (lambda.size() != alg.dim()) throw Error(ErrorKind::dimension_mismatch, "linear form has the wrong length");
  const std::vector<int> central = alg.central_basis_indices();
  if (static_cast<Eigen::Index>(central.size()) != alg.center().cols())
    throw Error(ErrorKind::unsupported_algebra,
                "the centre is not spanned by Malcev basis vectors; log Z(Γ) is not read off the basis");
  for (int i : central)
    if (!is_integer(lambda(i))) return false;
  return true;
}

long heisenberg_multiplicity(const LatticeData& lattice, long m) {
  const AlgebraQ& alg = *lattice.algebra;
  if (!alg.is_standard_heisenberg())
    throw Error(ErrorKind::unsupported_algebra, "multiplicity counting is implemented for the Heisenberg algebra only");
  if (m == 0)
    throw Error(ErrorKind::not_maximal_rank, "m = 0 gives characters of the torus factor, not an orbit of maximal rank");

  LinearForm<Rational> lambda = LinearForm<Rational>::Zero(3);
  lambda(2) = Rational(m);
  const MatrixQ polar = polarizing_subalgebra(alg, lambda);

  // Γ ∩ M is generated by the basis vectors spanning m, since m = span(E2, E3)
  // is a coordinate subspace.
  std::vector<int> generators;
  for (int i = 0; i < 3; ++i)
    if (span_contains<Rational>(polar, alg.basis_vector(i))) generators.push_back(i);
  if (static_cast<Eigen::Index>(generators.size()) != polar.cols())
    throw Error(ErrorKind::internal, "polarizing subalgebra is not a coordinate subspace");

  // χ on x^{-1} exp(W) x is exp(2πi λ(Ad(exp(−s E1)) W)), affine in s.
  struct Affine {
    Rational offset, slope;
  };
  std::vector<Affine> values;
  for (int g : generators) {
    const Rational at0 = lambda.dot(alg.basis_vector(g));
    const Rational at1 = coadjoint_act<Rational>(alg, alg.basis_vector(0), lambda).dot(alg.basis_vector(g));
    values.push_back({at0, at1 - at0});
  }

  // Candidate s come from the first nonconstant value; constant values must
  // already be integers.
  for (const auto& v : values)
    if (v.slope == 0 && !is_integer(v.offset)) return 0;
  const Affine* pivot = nullptr;
  for (const auto& v : values)
    if (v.slope != 0) {
      pivot = &v;
      break;
    }
  if (pivot == nullptr) throw Error(ErrorKind::internal, "stabilizer condition does not depend on the orbit");

  // s = (k − offset) / slope for integers k with s in [0, 1).
  const Rational lo = pivot->slope > 0 ? pivot->offset : Rational(pivot->offset + pivot->slope);
  const Rational hi = pivot->slope > 0 ? Rational(pivot->offset + pivot->slope) : pivot->offset;
  long count = 0;
  Integer k = boost::multiprecision::numerator(lo) / boost::multiprecision::denominator(lo) - 1;
  for (; Rational(k) <= hi; ++k) {
    const Rational s = (Rational(k) - pivot->offset) / pivot->slope;
    if (s < 0 || s >= 1) continue;
    bool ok = true;
    for (const auto& v : values)
      if (!is_integer(Rational(v.offset + v.slope * s))) ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace nilcoh
