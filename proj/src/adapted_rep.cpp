#include "nilcoh/adapted_rep.hpp"

#include <cmath>
#include <numbers>

namespace nilcoh {

namespace {

Eigen::VectorXd normalized(const VectorQ& v) {
  const Eigen::VectorXd d = to_double(v);
  return d / d.norm();
}

void orient_first_nonzero_positive(VectorQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) {
      if (v(i) < 0) v = -v;
      return;
    }
}

}  // namespace

AdaptedRepData build_adapted(const AlgebraQ& alg, const LinearForm<Rational>& lambda, const VectorQ& x) {
  const OrbitInvariants<Rational> inv = orbit_invariants(alg, lambda, x);
  if (!inv.maximal_rank) throw Error(ErrorKind::not_maximal_rank, "λ vanishes on n_k; the orbit is not of maximal rank");
  if (inv.delta_squared == 0)
    throw Error(ErrorKind::degenerate_direction, "δ_O(X) = 0: X lies in n_{k-1}^perp(O)");

  AdaptedRepData rep;
  rep.x = x;
  rep.lambda = lambda;
  rep.w_k_squared = inv.w_k_squared;
  rep.delta_squared = inv.delta_squared;
  rep.delta = inv.delta;

  const VectorQ v = b_x_functional(alg, lambda, x);
  rep.y_direction = orthogonal_projector<Rational>(penultimate_series_term(alg)) * v;
  orient_first_nonzero_positive(rep.y_direction);
  rep.y = normalized(rep.y_direction);
  const Rational bxy = b_form(alg, lambda, x, rep.y_direction);
  rep.coupling = bxy.convert_to<double>() / to_double(rep.y_direction).norm();

  // B_λ(T, Y) = w · T
  rep.normal_direction = VectorQ::Zero(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) rep.normal_direction(i) = b_form(alg, lambda, alg.basis_vector(i), rep.y_direction);
  if (rep.normal_direction.dot(x) < 0) rep.normal_direction = -rep.normal_direction;
  rep.nprime_basis = nullspace<Rational>(MatrixQ(rep.normal_direction.transpose()));
  rep.u = normalized(rep.normal_direction);
  const Rational xw = rep.normal_direction.dot(x);
  rep.x_component_squared = xw * xw / rep.normal_direction.squaredNorm();
  rep.x_component = std::sqrt(rep.x_component_squared.convert_to<double>());

  if (rep.nprime_basis.cols() != alg.dim() - 1 || span_contains<Rational>(rep.nprime_basis, x))
    throw Error(ErrorKind::internal, "n' is not a codimension one subspace avoiding X");
  for (int i = 0; i < alg.dim(); ++i)
    for (Eigen::Index j = 0; j < rep.nprime_basis.cols(); ++j)
      if (!span_contains<Rational>(rep.nprime_basis, alg.bracket(alg.basis_vector(i), rep.nprime_basis.col(j))))
        throw Error(ErrorKind::internal, "n' is not an ideal");

  rep.t0 = lambda.dot(rep.y_direction) / bxy;
  rep.lambda_shifted = coadjoint_act<Rational>(alg, VectorQ(rep.t0 * x), lambda);
  if (rep.lambda_shifted.dot(rep.y_direction) != 0) throw Error(ErrorKind::internal, "λ-shift failed to kill λ(Y)");

  const MatrixQ& nk = alg.series_term(alg.step());
  rep.nk2_basis = nk * nullspace<Rational>(MatrixQ((nk.transpose() * rep.lambda_shifted).transpose()));
  return rep;
}

std::vector<SymbolTerm> operator_symbol(const AlgebraQ& alg, const AdaptedRepData& rep, const VectorQ& e) {
  if (e.size() != alg.dim()) throw Error(ErrorKind::dimension_mismatch, "vector has the wrong length");
  if (!span_contains<Rational>(rep.nprime_basis, e)) throw Error(ErrorKind::not_in_ideal, "E is not in n'");
  const MatrixQ adx = alg.ad(rep.x);
  std::vector<SymbolTerm> terms;
  VectorQ current = e;
  for (int j = 0; j < alg.step(); ++j) {
    terms.push_back({j, current});
    current = adx * current / Rational(j + 1);
  }
  while (terms.size() > 1 && is_zero_matrix(terms.back().coefficient)) terms.pop_back();
  return terms;
}

std::vector<std::complex<double>> scalar_multiplier(const AlgebraQ& alg, const AdaptedRepData& rep,
                                                    const VectorQ& e) {
  const MatrixQ scalar_part = hstack<Rational>(MatrixQ(rep.y_direction), alg.series_term(alg.step()));
  std::vector<std::complex<double>> out;
  for (const auto& term : operator_symbol(alg, rep, e)) {
    if (!span_contains<Rational>(scalar_part, term.coefficient))
      throw Error(ErrorKind::not_scalar, "the symbol has a coefficient outside span(Y) + n_k");
    const double value = rep.lambda_shifted.dot(term.coefficient).convert_to<double>();
    out.emplace_back(0.0, 2.0 * std::numbers::pi * value);
  }
  return out;
}

QuotientReduction quotient_reduction(const AlgebraQ& alg, const AdaptedRepData& rep) {
  QuotientReduction out;
  // Greedily extend a basis of n_k'' to n'; the added vectors represent n̄'.
  MatrixQ accumulated = rep.nk2_basis;
  MatrixQ reps(alg.dim(), 0);
  for (Eigen::Index j = 0; j < rep.nprime_basis.cols(); ++j) {
    const VectorQ c = rep.nprime_basis.col(j);
    if (span_contains<Rational>(accumulated, c)) continue;
    accumulated = hstack<Rational>(accumulated, MatrixQ(c));
    reps = hstack<Rational>(reps, MatrixQ(c));
  }
  out.basis = reps;
  const Eigen::Index q = reps.cols();
  const MatrixQ full = hstack<Rational>(reps, rep.nk2_basis);

  auto reduce = [&](const VectorQ& v) { return VectorQ(coordinates_in<Rational>(full, v).head(q)); };

  out.structure.assign(static_cast<std::size_t>(q), MatrixQ::Zero(q, q));
  for (Eigen::Index a = 0; a < q; ++a)
    for (Eigen::Index b = 0; b < q; ++b)
      out.structure[static_cast<std::size_t>(a)].col(b) = reduce(alg.bracket(reps.col(a), reps.col(b)));

  out.lambda_bar = VectorQ(q);
  for (Eigen::Index a = 0; a < q; ++a) out.lambda_bar(a) = rep.lambda_shifted.dot(reps.col(a));
  out.y_bar = reduce(rep.y_direction);

  out.y_central = true;
  for (Eigen::Index b = 0; b < q; ++b) {
    VectorQ bracket = VectorQ::Zero(q);
    for (Eigen::Index a = 0; a < q; ++a) bracket += out.y_bar(a) * out.structure[static_cast<std::size_t>(a)].col(b);
    if (!is_zero_matrix(bracket)) out.y_central = false;
  }
  return out;
}

Rational xproj_margin_squared(const AlgebraQ& alg, const AdaptedRepData& rep) {
  const int first = alg.layer_offset(alg.step() - 1);
  const Rational c_squared = alg.bracket_norm_bound_squared(first, alg.dim());
  const Rational lhs = rep.x_component_squared * c_squared * rep.w_k_squared;
  const Rational bxy = b_form(alg, rep.lambda, rep.x, rep.y_direction);
  const Rational rhs = bxy * bxy / rep.y_direction.squaredNorm();
  return lhs - rhs;
}

}  // namespace nilcoh
