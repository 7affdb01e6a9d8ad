#pragma once

#include "nilcoh/errors.hpp"
#include "nilcoh/rational.hpp"

#include <vector>

// Subspaces of the ambient algebra are carried as matrices whose columns form
// a basis. For rational scalars every routine here is exact; for doubles the
// pivot search uses partial pivoting and NumericPolicy<double>::tolerance.

namespace nilcoh {

template <class Scalar>
struct EchelonForm {
  MatrixX<Scalar> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form.
template <class Scalar>
EchelonForm<Scalar> row_reduce(MatrixX<Scalar> a) {
  using Policy = NumericPolicy<Scalar>;
  EchelonForm<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index pivot = -1;
    if constexpr (Policy::exact) {
      for (Eigen::Index r = row; r < a.rows(); ++r)
        if (!Policy::is_zero(a(r, col))) {
          pivot = r;
          break;
        }
    } else {
      double best = 0.0;
      for (Eigen::Index r = row; r < a.rows(); ++r)
        if (Policy::magnitude(a(r, col)) > best) {
          best = Policy::magnitude(a(r, col));
          pivot = r;
        }
      if (Policy::is_zero(best)) pivot = -1;
    }
    if (pivot < 0) continue;
    a.row(row).swap(a.row(pivot));
    const Scalar inv = Scalar(1) / a(row, col);
    a.row(row) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || Policy::is_zero(a(r, col))) continue;
      const Scalar factor = a(r, col);
      a.row(r) -= factor * a.row(row);
    }
    if constexpr (!Policy::exact) {
      for (Eigen::Index r = 0; r < a.rows(); ++r)
        if (r != row) a(r, col) = Scalar(0);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <class Scalar>
Eigen::Index rank(const MatrixX<Scalar>& a) {
  if (a.size() == 0) return 0;
  return static_cast<Eigen::Index>(row_reduce<Scalar>(a).pivots.size());
}

/// Canonical basis (reduced echelon, as columns) of the column space of `a`.
template <class Scalar>
MatrixX<Scalar> column_basis(const MatrixX<Scalar>& a) {
  if (a.cols() == 0) return MatrixX<Scalar>(a.rows(), 0);
  const auto ech = row_reduce<Scalar>(a.transpose());
  const auto r = static_cast<Eigen::Index>(ech.pivots.size());
  return ech.reduced.topRows(r).transpose();
}

/// Basis (as columns) of {x : a x = 0}.
template <class Scalar>
MatrixX<Scalar> nullspace(const MatrixX<Scalar>& a) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return MatrixX<Scalar>::Identity(n, n);
  const auto ech = row_reduce<Scalar>(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    const auto col = static_cast<Eigen::Index>(k);
    basis(f, col) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      basis(ech.pivots[r], col) = -ech.reduced(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

template <class Scalar>
MatrixX<Scalar> hstack(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  if (a.rows() != b.rows() && a.cols() > 0 && b.cols() > 0)
    throw Error(ErrorKind::dimension_mismatch, "hstack row mismatch");
  const Eigen::Index rows = a.cols() > 0 ? a.rows() : b.rows();
  MatrixX<Scalar> out(rows, a.cols() + b.cols());
  if (a.cols() > 0) out.leftCols(a.cols()) = a;
  if (b.cols() > 0) out.rightCols(b.cols()) = b;
  return out;
}

/// span(a) ⊆ span(b)
template <class Scalar>
bool is_subspace(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  if (a.cols() == 0) return true;
  return rank<Scalar>(hstack<Scalar>(b, a)) == rank<Scalar>(b);
}

template <class Scalar>
bool same_subspace(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  return is_subspace<Scalar>(a, b) && is_subspace<Scalar>(b, a);
}

template <class Scalar>
bool span_contains(const MatrixX<Scalar>& basis, const VectorX<Scalar>& v) {
  MatrixX<Scalar> col = v;
  return is_subspace<Scalar>(col, basis);
}

template <class Scalar>
MatrixX<Scalar> subspace_sum(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  return column_basis<Scalar>(hstack<Scalar>(a, b));
}

/// Solves a x = b for square nonsingular a.
template <class Scalar>
MatrixX<Scalar> solve(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw Error(ErrorKind::dimension_mismatch, "solve expects a square system");
  const auto ech = row_reduce<Scalar>(hstack<Scalar>(a, b));
  if (static_cast<Eigen::Index>(ech.pivots.size()) < a.cols() ||
      (!ech.pivots.empty() && ech.pivots[static_cast<std::size_t>(a.cols() - 1)] != a.cols() - 1))
    throw Error(ErrorKind::internal, "singular system");
  return ech.reduced.topRightCorner(a.rows(), b.cols());
}

/// Orthogonal projector onto span(basis) for the standard inner product.
template <class Scalar>
MatrixX<Scalar> orthogonal_projector(const MatrixX<Scalar>& basis) {
  const Eigen::Index n = basis.rows();
  if (basis.cols() == 0) return MatrixX<Scalar>::Zero(n, n);
  const MatrixX<Scalar> gram = basis.transpose() * basis;
  const MatrixX<Scalar> bt = basis.transpose();
  return basis * solve<Scalar>(gram, bt);
}

/// Coordinates of v in the given basis; throws if v is outside the span.
template <class Scalar>
VectorX<Scalar> coordinates_in(const MatrixX<Scalar>& basis, const VectorX<Scalar>& v) {
  const auto ech = row_reduce<Scalar>(hstack<Scalar>(basis, MatrixX<Scalar>(v)));
  const auto k = basis.cols();
  VectorX<Scalar> out = VectorX<Scalar>::Zero(k);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == k) throw Error(ErrorKind::not_in_ideal, "vector is not in the span");
    out(ech.pivots[r]) = ech.reduced(static_cast<Eigen::Index>(r), k);
  }
  if (static_cast<Eigen::Index>(ech.pivots.size()) < k)
    throw Error(ErrorKind::internal, "basis columns are linearly dependent");
  return out;
}

template <class Scalar>
VectorX<Scalar> unit_vector(Eigen::Index dim, Eigen::Index i) {
  VectorX<Scalar> e = VectorX<Scalar>::Zero(dim);
  e(i) = Scalar(1);
  return e;
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero<Scalar>(m(i, j))) return false;
  return true;
}

}  // namespace nilcoh
