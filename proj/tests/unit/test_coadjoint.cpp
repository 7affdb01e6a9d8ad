#include "nilcoh/coadjoint.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace nilcoh;
using namespace nilcoh::testing;

namespace {

const std::vector<AlgebraQ>& property_algebras() {
  static const std::vector<AlgebraQ> algebras = {heisenberg(), filiform4(), heisenberg_plus_line()};
  return algebras;
}

}  // namespace

TEST(BForm, HeisenbergCentralForm) {
  const auto h = heisenberg();
  EXPECT_EQ(b_form(h, vec({0, 0, 7}), vec({1, 0, 0}), vec({0, 1, 0})), q(7));
}

TEST(BForm, Antisymmetric) {
  RationalGen gen(17);
  const auto n = filiform4();
  for (int trial = 0; trial < 50; ++trial) {
    const VectorQ lambda = gen.vector(4), x = gen.vector(4), y = gen.vector(4);
    EXPECT_EQ(b_form(n, lambda, x, x), q(0));
    EXPECT_EQ(b_form(n, lambda, x, y), Rational(-b_form(n, lambda, y, x)));
  }
}

TEST(BForm, FiliformLookup) {
  const auto n = filiform4();
  const VectorQ e4star = vec({0, 0, 0, 1});
  EXPECT_EQ(b_form(n, e4star, n.basis_vector(0), n.basis_vector(2)), q(1));
  EXPECT_EQ(b_form(n, e4star, n.basis_vector(0), n.basis_vector(1)), q(0));
}

TEST(CoadjointAct, CentralElementActsTrivially) {
  const auto h = heisenberg();
  const VectorQ lambda = vec({q(1, 2), -3, 5});
  EXPECT_EQ(coadjoint_act<Rational>(h, vec({0, 0, 9}), lambda), lambda);
}

TEST(CoadjointAct, HeisenbergShift) {
  // λ∘Ad(exp(−tE1)) sends E2 to λ(E2 − tE3) = −tm
  const auto h = heisenberg();
  const Rational t = q(3, 4), m = q(5);
  EXPECT_EQ(coadjoint_act<Rational>(h, vec({t, 0, 0}), vec({0, 0, m})), vec({0, Rational(-t * m), m}));
}

TEST(CoadjointAct, InverseAndActionLaw) {
  RationalGen gen(23);
  for (const auto& alg : property_algebras())
    for (int trial = 0; trial < 30; ++trial) {
      const VectorQ lambda = gen.vector(alg.dim()), g1 = gen.vector(alg.dim()), g2 = gen.vector(alg.dim());
      EXPECT_EQ(coadjoint_act<Rational>(alg, g1, coadjoint_act<Rational>(alg, VectorQ(-g1), lambda)), lambda);
      EXPECT_EQ(coadjoint_act<Rational>(alg, g1, coadjoint_act<Rational>(alg, g2, lambda)),
                coadjoint_act<Rational>(alg, bch_multiply(alg, g1, g2), lambda));
    }
}

TEST(OrbitInvariants, HeisenbergDeltaIsScaledNorm) {
  const auto h = heisenberg();
  RationalGen gen(29);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational m = gen(), a = gen(), b = gen(), c = gen();
    const auto inv = orbit_invariants<Rational>(h, vec({0, 0, m}), vec({a, b, c}));
    // B_λ(X, ·) = m(a dy − b dx) on n_{k−1} = n
    EXPECT_EQ(inv.delta_squared, Rational(m * m * (a * a + b * b)));
  }
}

TEST(OrbitInvariants, NonMaximalRankWhenLambdaVanishesOnTop) {
  const auto n = filiform4();
  const auto inv = orbit_invariants<Rational>(n, vec({1, 2, 3, 0}), vec({1, 0, 0, 0}));
  EXPECT_FALSE(inv.maximal_rank);
  EXPECT_EQ(inv.nk1_perp_basis.cols(), 4);
  EXPECT_TRUE(inv.degenerate_conditions[0] && inv.degenerate_conditions[1] && inv.degenerate_conditions[2]);
}

TEST(OrbitInvariants, HeisenbergWeights) {
  const auto inv = orbit_invariants<Rational>(heisenberg(), vec({2, 1, -4}), vec({1, 0, 0}));
  EXPECT_EQ(inv.w_k_squared, q(16));
  EXPECT_EQ(inv.w_z_squared, q(16));
  EXPECT_DOUBLE_EQ(inv.w_k, 4.0);
  EXPECT_TRUE(inv.maximal_rank);
}

TEST(OrbitInvariants, PerpInclusionsOnRandomForms) {
  RationalGen gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& alg = property_algebras()[static_cast<std::size_t>(trial % 3)];
    const VectorQ lambda = gen.vector(alg.dim());
    const auto inv = orbit_invariants<Rational>(alg, lambda, gen.vector(alg.dim()));
    const MatrixQ& perp = inv.nk1_perp_basis;
    EXPECT_TRUE(is_subspace<Rational>(inv.radical_basis, perp));
    EXPECT_TRUE(is_subspace<Rational>(alg.series_term(2), perp));
    for (Eigen::Index i = 0; i < perp.cols(); ++i)
      for (Eigen::Index j = 0; j < perp.cols(); ++j)
        EXPECT_TRUE(span_contains<Rational>(perp, alg.bracket(perp.col(i), perp.col(j))));
    EXPECT_LE(inv.w_k_squared, inv.w_z_squared);
    // the three characterizations of non maximal rank agree
    EXPECT_EQ(inv.degenerate_conditions[0], inv.degenerate_conditions[1]);
    EXPECT_EQ(inv.degenerate_conditions[0], inv.degenerate_conditions[2]);
    EXPECT_EQ(inv.maximal_rank, !inv.degenerate_conditions[0]);
  }
}

TEST(OrbitInvariants, ConstantAlongTheOrbitExactly) {
  RationalGen gen(37);
  for (const auto& alg : property_algebras())
    for (int trial = 0; trial < 5; ++trial) {
      const VectorQ lambda = gen.vector(alg.dim()), x = gen.vector(alg.dim());
      const auto base = orbit_invariants<Rational>(alg, lambda, x);
      for (int g = 0; g < 20; ++g) {
        const auto moved = orbit_invariants<Rational>(alg, coadjoint_act<Rational>(alg, gen.vector(alg.dim()), lambda), x);
        EXPECT_EQ(moved.delta_squared, base.delta_squared);
        EXPECT_EQ(moved.w_k_squared, base.w_k_squared);
        EXPECT_EQ(moved.w_z_squared, base.w_z_squared);
        ASSERT_EQ(moved.b_x_per_basis.size(), base.b_x_per_basis.size());
        for (std::size_t j = 0; j < base.b_x_per_basis.size(); ++j)
          EXPECT_EQ(moved.b_x_per_basis[j].second, base.b_x_per_basis[j].second);
        EXPECT_TRUE(same_subspace<Rational>(moved.nk1_perp_basis, base.nk1_perp_basis));
      }
    }
}

TEST(OrbitInvariants, ConstantAlongTheOrbitInFloat) {
  std::mt19937_64 rng(41);
  for (const auto& alg_q : property_algebras()) {
    const AlgebraD alg = alg_q.cast<double>();
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::VectorXd lambda = random_unit_interval(rng, alg.dim(), -3, 3);
      const Eigen::VectorXd x = random_unit_interval(rng, alg.dim(), -3, 3);
      const auto base = orbit_invariants<double>(alg, lambda, x);
      for (int g = 0; g < 20; ++g) {
        const Eigen::VectorXd h = random_unit_interval(rng, alg.dim(), -2, 2);
        const auto moved = orbit_invariants<double>(alg, coadjoint_act<double>(alg, h, lambda), x);
        EXPECT_NEAR(moved.delta, base.delta, 1e-12 * std::max(1.0, base.delta));
        EXPECT_NEAR(moved.w_k, base.w_k, 1e-12 * std::max(1.0, base.w_k));
        EXPECT_NEAR(moved.w_z, base.w_z, 1e-12 * std::max(1.0, base.w_z));
      }
    }
  }
}

TEST(Polarizing, HeisenbergChoosesSpanE2E3) {
  const auto h = heisenberg();
  const MatrixQ m = polarizing_subalgebra<Rational>(h, vec({0, 0, 1}));
  MatrixQ expected(3, 2);
  expected << 0, 0, 1, 0, 0, 1;
  EXPECT_TRUE(same_subspace<Rational>(m, expected));
  // every 2-dimensional subspace spanned by basis vectors: only spans containing
  // E3 are subalgebras, and span(E1, E3), span(E2, E3) are the isotropic ones
  const MatrixQ b = b_matrix(h, vec({0, 0, 1}));
  int isotropic_subalgebras = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      MatrixQ s = MatrixQ::Zero(3, 2);
      s(i, 0) = 1;
      s(j, 1) = 1;
      const bool closed = span_contains<Rational>(s, h.bracket(s.col(0), s.col(1)));
      const bool isotropic = is_zero_matrix(MatrixQ(s.transpose() * b * s));
      if (closed && isotropic) ++isotropic_subalgebras;
    }
  EXPECT_EQ(isotropic_subalgebras, 2);
}

TEST(Polarizing, DegenerateFormsGiveWholeAlgebra) {
  EXPECT_EQ(polarizing_subalgebra<Rational>(abelian(3), vec({1, 2, 3})).cols(), 3);
  EXPECT_EQ(polarizing_subalgebra<Rational>(filiform4(), VectorQ::Zero(4)).cols(), 4);
}

TEST(Polarizing, MaximalIsotropicOnRandomForms) {
  RationalGen gen(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& alg = property_algebras()[static_cast<std::size_t>(trial % 3)];
    const VectorQ lambda = gen.vector(alg.dim());
    const MatrixQ m = polarizing_subalgebra<Rational>(alg, lambda);
    const MatrixQ b = b_matrix(alg, lambda);
    EXPECT_EQ(m.cols(), alg.dim() - rank<Rational>(b) / 2);
    EXPECT_TRUE(is_zero_matrix(MatrixQ(m.transpose() * b * m)));
  }
}

TEST(WeaklyIntegral, HeisenbergIntegerCentralValues) {
  const auto h = heisenberg();
  const LatticeData lattice{&h};
  EXPECT_TRUE(weakly_integral(lattice, vec({q(1, 3), q(2, 7), 4})));
  EXPECT_TRUE(weakly_integral(lattice, vec({0, 0, 0})));
  EXPECT_FALSE(weakly_integral(lattice, vec({0, 0, q(1, 2)})));
}

TEST(WeaklyIntegral, ExtraCentralGeneratorCounts) {
  const auto h = heisenberg_plus_line();
  const LatticeData lattice{&h};
  EXPECT_TRUE(weakly_integral(lattice, vec({0, 0, 2, -1})));
  EXPECT_FALSE(weakly_integral(lattice, vec({0, 0, q(1, 2), 1})));
}

TEST(WeaklyIntegral, CentreNotOnBasisIsUnsupported) {
  const AlgebraQ skew(4, {3, 1}, {{0, 1, 3, q(1)}, {0, 2, 3, q(1)}});
  // centre = span(E4, E2 − E3), not spanned by basis vectors
  ASSERT_EQ(skew.center().cols(), 2);
  try {
    weakly_integral(LatticeData{&skew}, vec({0, 0, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_algebra);
  }
}

namespace {

// Hand enumeration of the Heisenberg closed orbits: x = exp(sE1) with s on a
// grid fine enough to contain every j/m, stabilizer character trivial iff
// m·s ∈ ℤ.
long enumerate_closed_orbits(long m) {
  constexpr long grid = 840;  // divisible by 1..8
  long count = 0;
  for (long j = 0; j < grid; ++j)
    if ((m * j) % grid == 0) ++count;
  return count;
}

}  // namespace

TEST(Multiplicity, MatchesHandEnumeration) {
  const auto h = heisenberg();
  const LatticeData lattice{&h};
  EXPECT_EQ(heisenberg_multiplicity(lattice, 1), 1);
  EXPECT_EQ(heisenberg_multiplicity(lattice, -3), 3);
  for (long m = -8; m <= 8; ++m) {
    if (m == 0) continue;
    EXPECT_EQ(heisenberg_multiplicity(lattice, m), enumerate_closed_orbits(m)) << m;
  }
}

TEST(Multiplicity, RejectsZeroAndOtherAlgebras) {
  const auto h = heisenberg();
  EXPECT_THROW(heisenberg_multiplicity(LatticeData{&h}, 0), Error);
  const auto n = filiform4();
  try {
    heisenberg_multiplicity(LatticeData{&n}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_algebra);
  }
}
