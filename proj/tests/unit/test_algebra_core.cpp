#include "nilcoh/algebra_io.hpp"
#include "nilcoh/bch.hpp"
#include "nilcoh/lattice.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace nilcoh;
using namespace nilcoh::testing;

namespace {

// Faithful matrix realizations used as an independent BCH oracle: the group
// product is computed as log(exp(A) exp(B)) with truncated matrix series.
struct MatrixModel {
  int size;
  std::vector<MatrixQ> images;  // image of each basis vector

  MatrixQ embed(const VectorQ& x) const {
    MatrixQ m = MatrixQ::Zero(size, size);
    for (std::size_t i = 0; i < images.size(); ++i) m += x(static_cast<Eigen::Index>(i)) * images[i];
    return m;
  }

  VectorQ extract(const MatrixQ& m) const {
    MatrixQ a(size * size, static_cast<Eigen::Index>(images.size()));
    for (std::size_t i = 0; i < images.size(); ++i)
      a.col(static_cast<Eigen::Index>(i)) = images[i].reshaped();
    const MatrixQ b = m.reshaped();
    return coordinates_in<Rational>(a, VectorQ(b.col(0)));
  }

  MatrixQ exp(const MatrixQ& n) const {
    MatrixQ term = MatrixQ::Identity(size, size), out = term;
    for (int j = 1; j < size; ++j) {
      term = term * n / Rational(j);
      out += term;
    }
    return out;
  }

  MatrixQ log(const MatrixQ& g) const {
    const MatrixQ n = g - MatrixQ::Identity(size, size);
    MatrixQ power = n, out = MatrixQ::Zero(size, size);
    for (int j = 1; j < size; ++j) {
      out += (j % 2 == 1 ? Rational(1) : Rational(-1)) * power / Rational(j);
      power = power * n;
    }
    return out;
  }

  VectorQ product(const VectorQ& x, const VectorQ& y) const { return extract(log(exp(embed(x)) * exp(embed(y)))); }
};

MatrixQ unit(int size, int r, int c) {
  MatrixQ m = MatrixQ::Zero(size, size);
  m(r, c) = 1;
  return m;
}

MatrixModel heisenberg_model() { return {3, {unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)}}; }

MatrixModel filiform_model() {
  const MatrixQ shift = unit(4, 0, 1) + unit(4, 1, 2) + unit(4, 2, 3);
  return {4, {shift, unit(4, 2, 3), unit(4, 1, 3), unit(4, 0, 3)}};
}

MatrixModel heisenberg_plus_line_model() {
  return {5, {unit(5, 0, 1), unit(5, 1, 2), unit(5, 3, 4), unit(5, 0, 2)}};
}

MatrixQ matrix_power(const MatrixQ& a, int p) {
  MatrixQ out = MatrixQ::Identity(a.rows(), a.cols());
  for (int i = 0; i < p; ++i) out = out * a;
  return out;
}

}  // namespace

TEST(Bracket, HeisenbergGenerators) {
  const auto h = heisenberg();
  EXPECT_EQ(h.bracket(vec({1, 0, 0}), vec({0, 1, 0})), vec({0, 0, 1}));
}

TEST(Bracket, SelfBracketVanishes) {
  const auto n = filiform4();
  RationalGen gen(1);
  for (int trial = 0; trial < 50; ++trial) {
    const VectorQ v = gen.vector(4);
    EXPECT_TRUE(is_zero_matrix(n.bracket(v, v)));
  }
}

TEST(Bracket, FiliformBilinearExpansion) {
  const auto n = filiform4();
  // [E1, E2 + E3] = [E1, E2] + [E1, E3] = E3 + E4
  EXPECT_EQ(n.bracket(vec({1, 0, 0, 0}), vec({0, 1, 1, 0})), vec({0, 0, 1, 1}));
}

TEST(Bracket, RejectsWrongLength) {
  const auto h = heisenberg();
  try {
    h.bracket(vec({1, 0}), vec({0, 1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dimension_mismatch);
  }
}

TEST(CentralSeries, Abelian) {
  const auto a = abelian(2);
  EXPECT_EQ(a.step(), 1);
  ASSERT_EQ(a.central_series().size(), 2u);
  EXPECT_EQ(a.central_series()[0].cols(), 2);
  EXPECT_EQ(a.central_series()[1].cols(), 0);
}

TEST(CentralSeries, Heisenberg) {
  const auto h = heisenberg();
  EXPECT_EQ(h.step(), 2);
  ASSERT_EQ(h.central_series().size(), 3u);
  EXPECT_TRUE(same_subspace<Rational>(h.series_term(2), MatrixQ(vec({0, 0, 1}))));
  EXPECT_EQ(h.series_term(3).cols(), 0);
}

TEST(CentralSeries, Filiform) {
  const auto n = filiform4();
  EXPECT_EQ(n.step(), 3);
  MatrixQ n2(4, 2);
  n2 << 0, 0, 0, 0, 1, 0, 0, 1;
  EXPECT_TRUE(same_subspace<Rational>(n.series_term(2), n2));
  EXPECT_TRUE(same_subspace<Rational>(n.series_term(3), MatrixQ(vec({0, 0, 0, 1}))));
  EXPECT_EQ(n.series_term(4).cols(), 0);
}

TEST(CentralSeries, TermsAreDecreasingIdeals) {
  for (const auto& alg : {heisenberg(), filiform4(), heisenberg_plus_line(), abelian(3)}) {
    for (int j = 1; j <= alg.step(); ++j) {
      const MatrixQ& nj = alg.series_term(j);
      const MatrixQ& next = alg.series_term(j + 1);
      EXPECT_TRUE(is_subspace<Rational>(next, nj));
      for (int i = 0; i < alg.dim(); ++i)
        for (Eigen::Index c = 0; c < nj.cols(); ++c)
          EXPECT_TRUE(span_contains<Rational>(next, alg.bracket(alg.basis_vector(i), nj.col(c))));
    }
    EXPECT_TRUE(is_subspace<Rational>(alg.series_term(alg.step()), alg.center()));
  }
}

TEST(Validation, JacobiResidualVanishesOnBundledAlgebras) {
  for (const auto& alg : {heisenberg(), filiform4(), heisenberg_plus_line()})
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j)
        for (int l = 0; l < alg.dim(); ++l) EXPECT_TRUE(is_zero_matrix(alg.jacobi_residual(i, j, l)));
}

TEST(Validation, RejectsBrokenInput) {
  auto expect_validation = [](const std::function<void()>& build) {
    try {
      build();
      FAIL() << "construction succeeded";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::validation) << e.what();
    }
  };
  // inconsistent antisymmetric pair
  expect_validation([] { AlgebraQ(3, {2, 1}, {{0, 1, 2, q(1)}, {1, 0, 2, q(1)}}); });
  // Jacobi fails on (E1, E2, E3)
  expect_validation([] { AlgebraQ(5, {3, 1, 1}, {{0, 1, 3, q(1)}, {2, 3, 4, q(1)}}); });
  // not nilpotent
  expect_validation([] { AlgebraQ(2, {1, 1}, {{0, 1, 1, q(1)}}); });
  // wrong layer sizes
  expect_validation([] { AlgebraQ(3, {1, 2}, {{0, 1, 2, q(1)}}); });
  // declared step disagrees
  expect_validation([] { AlgebraQ(3, {3}, {{0, 1, 2, q(1)}}); });
  // flag violated: the bracket lands on an earlier basis vector
  expect_validation([] { AlgebraQ(3, {2, 1}, {{1, 2, 0, q(1)}}); });
}

TEST(AdMatrix, CentralElementHasZeroAd) {
  EXPECT_TRUE(is_zero_matrix(heisenberg().ad(vec({0, 0, 1}))));
}

TEST(AdMatrix, HeisenbergGeneratorIsRankOne) {
  const MatrixQ a = heisenberg().ad(vec({1, 0, 0}));
  EXPECT_EQ(rank<Rational>(a), 1);
  EXPECT_EQ(VectorQ(a * vec({0, 1, 0})), vec({0, 0, 1}));
}

TEST(AdMatrix, FiliformSquare) {
  const MatrixQ a = filiform4().ad(vec({1, 0, 0, 0}));
  const MatrixQ a2 = a * a;
  MatrixQ expected = MatrixQ::Zero(4, 4);
  expected(3, 1) = 1;  // E2 -> E4
  EXPECT_EQ(a2, expected);
}

TEST(AdMatrix, NilpotentOfIndexStep) {
  RationalGen gen(7);
  for (const auto& alg : {heisenberg(), filiform4(), heisenberg_plus_line()}) {
    for (int i = 0; i < alg.dim(); ++i)
      EXPECT_TRUE(is_zero_matrix(matrix_power(alg.ad(alg.basis_vector(i)), alg.step())));
    for (int trial = 0; trial < 20; ++trial)
      EXPECT_TRUE(is_zero_matrix(matrix_power(alg.ad(gen.vector(alg.dim())), alg.step())));
  }
}

TEST(Bch, HeisenbergGenerators) {
  EXPECT_EQ(bch_multiply(heisenberg(), vec({1, 0, 0}), vec({0, 1, 0})), vec({1, 1, q(1, 2)}));
}

TEST(Bch, FiliformGenerators) {
  EXPECT_EQ(bch_multiply(filiform4(), vec({1, 0, 0, 0}), vec({0, 1, 0, 0})), vec({1, 1, q(1, 2), q(1, 12)}));
}

TEST(Bch, InverseAndIdentity) {
  RationalGen gen(3);
  const auto n = filiform4();
  for (int trial = 0; trial < 50; ++trial) {
    const VectorQ x = gen.vector(4);
    EXPECT_TRUE(is_zero_matrix(bch_multiply<Rational>(n, x, -x)));
    EXPECT_EQ(bch_multiply<Rational>(n, x, VectorQ::Zero(4)), x);
  }
}

TEST(Bch, AgreesWithMatrixModels) {
  RationalGen gen(11);
  const std::vector<std::pair<AlgebraQ, MatrixModel>> cases = {
      {heisenberg(), heisenberg_model()},
      {filiform4(), filiform_model()},
      {heisenberg_plus_line(), heisenberg_plus_line_model()}};
  for (const auto& [alg, model] : cases) {
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j) {
        const MatrixQ lhs = model.embed(alg.bracket(alg.basis_vector(i), alg.basis_vector(j)));
        const MatrixQ a = model.images[static_cast<std::size_t>(i)], b = model.images[static_cast<std::size_t>(j)];
        ASSERT_EQ(lhs, MatrixQ(a * b - b * a)) << "matrix model is not a representation";
      }
    for (int trial = 0; trial < 40; ++trial) {
      const VectorQ x = gen.vector(alg.dim()), y = gen.vector(alg.dim());
      EXPECT_EQ(bch_multiply(alg, x, y), model.product(x, y));
    }
  }
}

TEST(Bch, AssociativeOnRandomTriples) {
  RationalGen gen(2024);
  const std::vector<AlgebraQ> algebras = {heisenberg(), filiform4(), heisenberg_plus_line()};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& alg = algebras[static_cast<std::size_t>(trial % 3)];
    const VectorQ x = gen.vector(alg.dim()), y = gen.vector(alg.dim()), z = gen.vector(alg.dim());
    ASSERT_EQ(bch_multiply(alg, bch_multiply(alg, x, y), z), bch_multiply(alg, x, bch_multiply(alg, y, z)));
  }
}

TEST(Bch, RejectsStepFive) {
  // filiform algebra of dimension 6: [E1, E_j] = E_{j+1}
  std::vector<BracketEntry<Rational>> entries;
  for (int j = 1; j < 5; ++j) entries.push_back({0, j, j + 1, q(1)});
  const AlgebraQ f6(6, {2, 1, 1, 1, 1}, entries);
  ASSERT_EQ(f6.step(), 5);
  try {
    bch_multiply(f6, f6.basis_vector(0), f6.basis_vector(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_step);
  }
}

TEST(Bch, GroupCommutatorWithCentralBracket) {
  // In n4, [E1, E3] = E4 is central, so the group commutator is exp(E4).
  const auto n = filiform4();
  for (const auto& [i, y] : std::vector<std::pair<int, VectorQ>>{{0, vec({0, 0, 1, 0})}, {1, vec({0, 0, q(3), q(2)})}}) {
    const VectorQ x = n.basis_vector(i);
    const VectorQ br = n.bracket(x, y);
    ASSERT_TRUE(n.ad(br).isZero() || is_zero_matrix(n.ad(br)));
    EXPECT_EQ(group_commutator(n, x, y), br);
  }
}

TEST(SecondKind, RoundTrip) {
  RationalGen gen(5);
  for (const auto& alg : {heisenberg(), filiform4(), heisenberg_plus_line()})
    for (int trial = 0; trial < 30; ++trial) {
      const VectorQ s = gen.vector(alg.dim());
      EXPECT_EQ(second_kind_from_log(alg, log_from_second_kind(alg, s)), s);
    }
}

TEST(SecondKind, HeisenbergClosedForm) {
  // exp(aE1) exp(bE2) exp(cE3) = exp(aE1 + bE2 + (c + ab/2)E3)
  EXPECT_EQ(log_from_second_kind(heisenberg(), vec({2, 3, 5})), vec({2, 3, 8}));
}

TEST(AlgebraFile, BundledFilesParse) {
  const AlgebraQ h = load_algebra(NILCOH_DATA_DIR "/heisenberg.alg");
  EXPECT_TRUE(h.is_standard_heisenberg());
  EXPECT_EQ(h.labels()[2], "Z");
  EXPECT_EQ(load_algebra(NILCOH_DATA_DIR "/filiform4.alg").step(), 3);
  EXPECT_EQ(load_algebra(NILCOH_DATA_DIR "/abelian2.alg").step(), 1);
  EXPECT_EQ(load_algebra(NILCOH_DATA_DIR "/h3r.alg").center().cols(), 2);
}

TEST(AlgebraFile, FormatRoundTrips) {
  const AlgebraQ n(4, {2, 1, 1}, {{0, 1, 2, q(3, 2)}, {0, 2, 3, q(-2, 7)}});
  const AlgebraQ back = parse_algebra(format_algebra(n));
  EXPECT_EQ(back.dim(), 4);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(back.ad_basis(i), n.ad_basis(i));
}

TEST(AlgebraFile, MissingFileIsInvalidArgument) {
  try {
    load_algebra("/nonexistent/file.alg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
  }
}

TEST(AlgebraFile, DeclaredStepMustMatch) {
  EXPECT_THROW(parse_algebra("dim: 3\nstep: 3\nlayers: [2, 1]\nbrackets:\n  - [1, 2, 3, \"1\"]\n"), Error);
}

TEST(Lattice, StandardLatticesPassNecessaryCheck) {
  const AlgebraQ scaled_filiform(4, {2, 1, 1}, {{0, 1, 2, q(1)}, {0, 2, 3, q(2)}});
  for (const auto& alg : {heisenberg(), heisenberg_plus_line(), scaled_filiform}) {
    const LatticeData lattice{&alg};
    EXPECT_TRUE(lattice.necessary_condition_failures().empty()) << alg.name();
  }
}

TEST(Lattice, UnitFiliformConstantsAreFlagged) {
  // log of the group commutator of exp(E1), exp(E2) is E3 + E4/2 here
  const AlgebraQ n = filiform4();
  EXPECT_FALSE(LatticeData{&n}.necessary_condition_failures().empty());
}

TEST(Lattice, HalfIntegerBracketIsFlagged) {
  const AlgebraQ h(3, {2, 1}, {{0, 1, 2, q(1, 2)}});
  const LatticeData lattice{&h};
  EXPECT_FALSE(lattice.necessary_condition_failures().empty());
}
