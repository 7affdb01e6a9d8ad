#pragma once

#include "nilcoh/errors.hpp"
#include "nilcoh/linalg.hpp"
#include "nilcoh/rational.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace nilcoh {

/// One nonzero structure constant [E_i, E_j] ∋ coefficient · E_l (0-based).
template <class Scalar>
struct BracketEntry {
  int i;
  int j;
  int l;
  Scalar coefficient;
};

/// A nilpotent Lie algebra given on a Malcev basis adapted to its descending
/// central series. The basis is ordered by layers: the first layers[0]
/// vectors span a complement of n_2, the next layers[1] a complement of n_3
/// in n_2, and so on. Construction validates antisymmetry, the Jacobi
/// identity, nilpotency, the declared step, the layer structure, and the
/// Malcev flag property, and throws ErrorKind::validation on any failure.
/// Instances are immutable.
template <class Scalar>
class NilpotentLieAlgebra {
 public:
  using Vector = VectorX<Scalar>;
  using Matrix = MatrixX<Scalar>;

  NilpotentLieAlgebra(int dim, std::vector<int> layers, const std::vector<BracketEntry<Scalar>>& brackets,
                      std::vector<std::string> labels = {}, std::string name = {})
      : dim_(dim), layers_(std::move(layers)), labels_(std::move(labels)), name_(std::move(name)) {
    if (dim_ <= 0) throw Error(ErrorKind::validation, "dimension must be positive");
    ad_.assign(static_cast<std::size_t>(dim_), Matrix::Zero(dim_, dim_));
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(dim_),
                                        std::vector<bool>(static_cast<std::size_t>(dim_ * dim_), false));
    for (const auto& e : brackets) {
      if (e.i < 0 || e.j < 0 || e.l < 0 || e.i >= dim_ || e.j >= dim_ || e.l >= dim_)
        throw Error(ErrorKind::validation, "bracket index out of range");
      if (e.i == e.j) {
        if (!is_zero<Scalar>(e.coefficient))
          throw Error(ErrorKind::validation, "antisymmetry violated: [E_i, E_i] must vanish");
        continue;
      }
      auto set = [&](int a, int b, const Scalar& c) {
        auto flag = seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b * dim_ + e.l)];
        Scalar& slot = ad_[static_cast<std::size_t>(a)](e.l, b);
        if (flag && !is_zero<Scalar>(slot - c))
          throw Error(ErrorKind::validation, "antisymmetry violated: inconsistent entries for [E" +
                                                 std::to_string(a + 1) + ", E" + std::to_string(b + 1) + "]");
        slot = c;
        flag = true;
      };
      set(e.i, e.j, e.coefficient);
      set(e.j, e.i, Scalar(-e.coefficient));
    }
    if (labels_.empty()) {
      for (int i = 0; i < dim_; ++i) labels_.push_back("E" + std::to_string(i + 1));
    }
    if (static_cast<int>(labels_.size()) != dim_) throw Error(ErrorKind::validation, "label count must equal dim");
    validate();
  }

  int dim() const noexcept { return dim_; }
  int step() const noexcept { return static_cast<int>(series_.size()) - 1; }
  const std::vector<int>& layers() const noexcept { return layers_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }

  /// Number of generators n = dim n/[n,n].
  int generator_count() const noexcept { return layers_.front(); }

  /// Index of the first basis vector of layer j (1-based layer number).
  int layer_offset(int j) const {
    if (j < 1 || j > static_cast<int>(layers_.size()) + 1) throw Error(ErrorKind::invalid_argument, "layer out of range");
    return std::accumulate(layers_.begin(), layers_.begin() + (j - 1), 0);
  }

  Vector basis_vector(int i) const { return unit_vector<Scalar>(dim_, i); }

  Scalar structure_constant(int i, int j, int l) const { return ad_[static_cast<std::size_t>(i)](l, j); }

  /// ad(E_i), column j holds [E_i, E_j].
  const Matrix& ad_basis(int i) const { return ad_[static_cast<std::size_t>(i)]; }

  Matrix ad(const Vector& x) const {
    check_dim(x);
    Matrix out = Matrix::Zero(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      if (x(i) != Scalar(0)) out += x(i) * ad_[static_cast<std::size_t>(i)];
    return out;
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    check_dim(x);
    check_dim(y);
    Vector out = Vector::Zero(dim_);
    for (int i = 0; i < dim_; ++i)
      if (x(i) != Scalar(0)) out += x(i) * (ad_[static_cast<std::size_t>(i)] * y);
    return out;
  }

  /// n_1 = n, n_{j+1} = [n, n_j]; the last entry is the zero subspace n_{k+1}.
  const std::vector<Matrix>& central_series() const noexcept { return series_; }

  /// Basis of n_j for 1 <= j <= step + 1.
  const Matrix& series_term(int j) const { return series_.at(static_cast<std::size_t>(j - 1)); }

  const Matrix& center() const noexcept { return center_; }

  bool is_abelian() const noexcept { return step() == 1; }

  /// Basis vectors E_i that are themselves central.
  std::vector<int> central_basis_indices() const {
    std::vector<int> out;
    for (int i = 0; i < dim_; ++i)
      if (is_zero_matrix(ad_[static_cast<std::size_t>(i)])) out.push_back(i);
    return out;
  }

  /// Sum of squares of the structure constants c_{ij}^l with j restricted to
  /// the given basis range; an upper bound for max ||[u, y]||^2 over unit u in
  /// n and unit y in span(E_j : j in range).
  Scalar bracket_norm_bound_squared(int first_j, int last_j) const {
    Scalar total(0);
    for (int i = 0; i < dim_; ++i)
      for (int j = first_j; j < last_j; ++j)
        for (int l = 0; l < dim_; ++l) {
          const Scalar c = structure_constant(i, j, l);
          total += c * c;
        }
    return total;
  }

  /// Residual of the Jacobi identity on a basis triple.
  Vector jacobi_residual(int i, int j, int l) const {
    const Vector a = basis_vector(i), b = basis_vector(j), c = basis_vector(l);
    return bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
  }

  /// The standard Heisenberg algebra [E1, E2] = E3 with layers (2, 1).
  bool is_standard_heisenberg() const {
    if (dim_ != 3 || layers_ != std::vector<int>{2, 1}) return false;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
          Scalar expected(0);
          if (i == 0 && j == 1 && l == 2) expected = Scalar(1);
          if (i == 1 && j == 0 && l == 2) expected = Scalar(-1);
          if (!is_zero<Scalar>(structure_constant(i, j, l) - expected)) return false;
        }
    return true;
  }

  std::vector<BracketEntry<Scalar>> bracket_entries() const {
    std::vector<BracketEntry<Scalar>> out;
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int l = 0; l < dim_; ++l)
          if (!is_zero<Scalar>(structure_constant(i, j, l))) out.push_back({i, j, l, structure_constant(i, j, l)});
    return out;
  }

  template <class Target>
  NilpotentLieAlgebra<Target> cast() const {
    std::vector<BracketEntry<Target>> entries;
    for (const auto& e : bracket_entries()) {
      if constexpr (std::is_same_v<Scalar, Rational>) {
        entries.push_back({e.i, e.j, e.l, scalar_cast<Target>(e.coefficient)});
      } else {
        entries.push_back({e.i, e.j, e.l, static_cast<Target>(e.coefficient)});
      }
    }
    return NilpotentLieAlgebra<Target>(dim_, layers_, entries, labels_, name_);
  }

 private:
  void check_dim(const Vector& x) const {
    if (x.size() != dim_)
      throw Error(ErrorKind::dimension_mismatch,
                  "expected a vector of length " + std::to_string(dim_) + ", got " + std::to_string(x.size()));
  }

  void validate() {
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int l = j + 1; l < dim_; ++l)
          if (!is_zero_matrix(jacobi_residual(i, j, l)))
            throw Error(ErrorKind::validation, "Jacobi identity fails for (E" + std::to_string(i + 1) + ", E" +
                                                   std::to_string(j + 1) + ", E" + std::to_string(l + 1) + ")");

    series_.push_back(Matrix::Identity(dim_, dim_));
    while (series_.back().cols() > 0) {
      if (static_cast<int>(series_.size()) > dim_)
        throw Error(ErrorKind::validation, "descending central series does not terminate: algebra is not nilpotent");
      const Matrix& prev = series_.back();
      Matrix spans(dim_, dim_ * prev.cols());
      for (int i = 0; i < dim_; ++i)
        spans.middleCols(i * prev.cols(), prev.cols()) = ad_[static_cast<std::size_t>(i)] * prev;
      Matrix next = column_basis<Scalar>(spans);
      if (next.cols() == prev.cols())
        throw Error(ErrorKind::validation, "descending central series stalls: algebra is not nilpotent");
      series_.push_back(std::move(next));
    }

    if (static_cast<int>(layers_.size()) != step())
      throw Error(ErrorKind::validation, "declared layer count " + std::to_string(layers_.size()) +
                                             " differs from the nilpotency step " + std::to_string(step()));
    if (std::accumulate(layers_.begin(), layers_.end(), 0) != dim_)
      throw Error(ErrorKind::validation, "layer sizes must sum to dim");
    for (int j = 1; j <= step(); ++j) {
      const int off = layer_offset(j);
      if (layers_[static_cast<std::size_t>(j - 1)] <= 0) throw Error(ErrorKind::validation, "layer sizes must be positive");
      Matrix coordinate = Matrix::Zero(dim_, dim_ - off);
      for (int c = 0; c < dim_ - off; ++c) coordinate(off + c, c) = Scalar(1);
      if (!same_subspace<Scalar>(coordinate, series_[static_cast<std::size_t>(j - 1)]))
        throw Error(ErrorKind::validation,
                    "basis is not adapted to the central series: layers " + std::to_string(j) + ".. do not span n_" +
                        std::to_string(j));
    }

    // Dropping the first m basis vectors must leave a subalgebra for every m.
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int l = 0; l < std::min(i, j); ++l)
          if (!is_zero<Scalar>(structure_constant(i, j, l)))
            throw Error(ErrorKind::validation, "Malcev flag property violated by [E" + std::to_string(i + 1) + ", E" +
                                                   std::to_string(j + 1) + "]");

    Matrix stacked(dim_ * dim_, dim_);
    for (int i = 0; i < dim_; ++i) stacked.middleRows(i * dim_, dim_) = ad_[static_cast<std::size_t>(i)];
    center_ = nullspace<Scalar>(stacked);
  }

  int dim_;
  std::vector<int> layers_;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<Matrix> ad_;
  std::vector<Matrix> series_;
  Matrix center_;
};

using AlgebraQ = NilpotentLieAlgebra<Rational>;
using AlgebraD = NilpotentLieAlgebra<double>;

}  // namespace nilcoh
