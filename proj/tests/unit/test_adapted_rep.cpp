#include "nilcoh/adapted_rep.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace nilcoh;
using namespace nilcoh::testing;

namespace {

// Random (λ, X) with λ|n_k ≠ 0 and δ_O(X) > 0.
std::pair<VectorQ, VectorQ> random_maximal_rank_pair(const AlgebraQ& alg, RationalGen& gen) {
  while (true) {
    const VectorQ lambda = gen.vector(alg.dim()), x = gen.vector(alg.dim());
    const auto inv = orbit_invariants<Rational>(alg, lambda, x);
    if (inv.maximal_rank && inv.delta_squared != 0) return {lambda, x};
  }
}

void expect_kind(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    FAIL() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(BuildAdapted, HeisenbergGenerator) {
  const auto h = heisenberg();
  const Rational m = 3;
  const auto rep = build_adapted(h, vec({0, 0, m}), vec({1, 0, 0}));
  EXPECT_TRUE(same_subspace<Rational>(MatrixQ(rep.y_direction), MatrixQ(vec({0, 1, 0}))));
  EXPECT_NEAR(rep.y(1), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(rep.delta, 3.0);
  MatrixQ nprime(3, 2);
  nprime << 0, 0, 1, 0, 0, 1;
  EXPECT_TRUE(same_subspace<Rational>(rep.nprime_basis, nprime));
  EXPECT_NEAR(rep.u(0), 1.0, 1e-15);
  EXPECT_EQ(rep.x_component_squared, q(1));
  EXPECT_DOUBLE_EQ(rep.coupling, 3.0);
}

TEST(BuildAdapted, CentralPerturbationDoesNotMatter) {
  const auto h = heisenberg();
  const auto a = build_adapted(h, vec({0, 0, 2}), vec({1, 0, 0}));
  const auto b = build_adapted(h, vec({0, 0, 2}), vec({1, 0, 1}));
  EXPECT_EQ(a.y_direction, b.y_direction);
  EXPECT_EQ(a.delta_squared, b.delta_squared);
}

TEST(BuildAdapted, Filiform) {
  const auto n = filiform4();
  const auto rep = build_adapted(n, vec({0, 0, 0, 1}), vec({1, 0, 0, 0}));
  EXPECT_TRUE(same_subspace<Rational>(MatrixQ(rep.y_direction), MatrixQ(vec({0, 0, 1, 0}))));
  EXPECT_EQ(rep.delta_squared, q(1));
  MatrixQ nprime(4, 3);
  nprime << 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1;
  EXPECT_TRUE(same_subspace<Rational>(rep.nprime_basis, nprime));
}

TEST(BuildAdapted, Errors) {
  const auto n = filiform4();
  expect_kind(ErrorKind::not_maximal_rank, [&] { build_adapted(n, vec({1, 1, 1, 0}), vec({1, 0, 0, 0})); });
  expect_kind(ErrorKind::degenerate_direction, [&] { build_adapted(n, vec({0, 0, 0, 1}), vec({0, 1, 0, 0})); });
}

TEST(BuildAdapted, LambdaShiftKillsY) {
  const auto h = heisenberg();
  const auto rep = build_adapted(h, vec({q(1, 2), q(7, 3), 2}), vec({1, q(1, 5), 0}));
  EXPECT_EQ(rep.lambda_shifted.dot(rep.y_direction), q(0));
}

TEST(OperatorSymbol, HeisenbergYActsAsMultiplication) {
  const auto h = heisenberg();
  const Rational m = -2;
  const auto rep = build_adapted(h, vec({0, 0, m}), vec({1, 0, 0}));
  const auto terms = operator_symbol(h, rep, vec({0, 1, 0}));
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[1].coefficient, vec({0, 0, 1}));
  const auto p = scalar_multiplier(h, rep, vec({0, 1, 0}));  // the unit Y
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(std::abs(p[0]), 0.0, 1e-15);
  // π(Y) = 2πi B_λ(X, Y) t
  EXPECT_NEAR(p[1].imag(), 2 * std::numbers::pi * rep.coupling, 1e-12);
}

TEST(OperatorSymbol, CentralElementIsScalar) {
  const auto h = heisenberg();
  const auto rep = build_adapted(h, vec({1, 1, 5}), vec({1, 2, 0}));
  const auto terms = operator_symbol(h, rep, vec({0, 0, 1}));
  ASSERT_EQ(terms.size(), 1u);
  const auto p = scalar_multiplier(h, rep, vec({0, 0, 1}));
  EXPECT_NEAR(p[0].imag(), 2 * std::numbers::pi * 5, 1e-12);
}

TEST(OperatorSymbol, FiliformIteratedBrackets) {
  const auto n = filiform4();
  const auto rep = build_adapted(n, vec({0, 0, 0, 1}), vec({1, 0, 0, 0}));
  const auto terms = operator_symbol(n, rep, vec({0, 1, 0, 0}));
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0].coefficient, vec({0, 1, 0, 0}));
  EXPECT_EQ(terms[1].coefficient, vec({0, 0, 1, 0}));
  EXPECT_EQ(terms[2].coefficient, vec({0, 0, 0, q(1, 2)}));
  // E2 itself is not in span(Y) + n_k
  expect_kind(ErrorKind::not_scalar, [&] { scalar_multiplier(n, rep, vec({0, 1, 0, 0})); });
}

TEST(OperatorSymbol, OutsideIdealRejected) {
  const auto h = heisenberg();
  const auto rep = build_adapted(h, vec({0, 0, 1}), vec({1, 0, 0}));
  expect_kind(ErrorKind::not_in_ideal, [&] { operator_symbol(h, rep, vec({1, 0, 0})); });
}

TEST(QuotientReduction, Heisenberg) {
  const auto h = heisenberg();
  const auto rep = build_adapted(h, vec({0, 0, 4}), vec({1, 0, 0}));
  EXPECT_EQ(rep.nk2_basis.cols(), 0);
  const auto red = quotient_reduction(h, rep);
  EXPECT_EQ(red.basis.cols(), 2);
  EXPECT_TRUE(red.y_central);
  EXPECT_EQ(red.lambda_bar.dot(red.y_bar), q(0));
}

TEST(QuotientReduction, Filiform) {
  const auto n = filiform4();
  const auto rep = build_adapted(n, vec({0, 0, 0, 1}), vec({1, 0, 0, 0}));
  const auto red = quotient_reduction(n, rep);
  EXPECT_EQ(red.basis.cols(), 3);
  EXPECT_TRUE(red.y_central);
  EXPECT_EQ(red.lambda_bar.dot(red.y_bar), q(0));
}

TEST(QuotientReduction, NontrivialKernelOnExtraCentre) {
  // n_k = span(E4) in h3 + R, so n_k'' = 0; the extra centre stays in n̄'.
  const auto alg = heisenberg_plus_line();
  const auto rep = build_adapted(alg, vec({0, 0, 1, 1}), vec({1, 0, 0, 0}));
  const auto red = quotient_reduction(alg, rep);
  EXPECT_TRUE(red.y_central);
}

TEST(AdaptedProperties, RandomMaximalRankPairs) {
  RationalGen gen(53);
  const std::vector<AlgebraQ> algebras = {heisenberg(), filiform4()};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& alg = algebras[static_cast<std::size_t>(trial % 2)];
    const auto [lambda, x] = random_maximal_rank_pair(alg, gen);
    const auto rep = build_adapted(alg, lambda, x);

    EXPECT_GE(xproj_margin_squared(alg, rep), q(0));
    EXPECT_EQ(rep.lambda_shifted.dot(rep.y_direction), q(0));
    // the shift stays on the orbit and leaves B_λ(X, Y) unchanged
    EXPECT_EQ(b_form(alg, rep.lambda_shifted, x, rep.y_direction), b_form(alg, lambda, x, rep.y_direction));
    // n' is an ideal
    for (int i = 0; i < alg.dim(); ++i)
      for (Eigen::Index c = 0; c < rep.nprime_basis.cols(); ++c)
        EXPECT_TRUE(span_contains<Rational>(rep.nprime_basis, alg.bracket(alg.basis_vector(i), rep.nprime_basis.col(c))));
    // Ad(exp tX)Y − Y − t[X, Y] = 0 for Y in n_{k−1}
    const Rational t = gen();
    const VectorQ residual = adjoint_action<Rational>(alg, VectorQ(t * x)) * rep.y_direction - rep.y_direction -
                             t * alg.bracket(x, rep.y_direction);
    EXPECT_TRUE(is_zero_matrix(residual));
    // elements of n_k act by 2πi λ(E)
    const MatrixQ& nk = alg.series_term(alg.step());
    for (Eigen::Index c = 0; c < nk.cols(); ++c) {
      const auto p = scalar_multiplier(alg, rep, nk.col(c));
      ASSERT_EQ(p.size(), 1u);
      EXPECT_NEAR(p[0].imag(), 2 * std::numbers::pi * lambda.dot(nk.col(c)).convert_to<double>(), 1e-12);
    }
    EXPECT_TRUE(quotient_reduction(alg, rep).y_central);
  }
}
