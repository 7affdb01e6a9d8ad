#include "nilcoh/rep_function.hpp"

#include <cmath>
#include <numbers>

namespace nilcoh {

using std::numbers::pi;

Eigen::VectorXd Grid::nodes() const {
  Eigen::VectorXd t(size);
  for (int j = 0; j < size; ++j) t(j) = node(j);
  return t;
}

double RepContext::oscillator_frequency() const {
  if (!heisenberg_m) throw Error(ErrorKind::mode_mismatch, "hermite mode needs a Heisenberg representation");
  return 2.0 * pi * std::abs(*heisenberg_m);
}

RepFunction RepFunction::on_grid(const RepContext& ctx, const Grid& grid, Eigen::MatrixXcd values, DecayKind kind) {
  if (values.rows() != grid.size || values.cols() != ctx.fiber_dim)
    throw Error(ErrorKind::dimension_mismatch, "grid values must be N x fiber_dim");
  RepFunction f;
  f.mode_ = RepMode::grid;
  f.kind_ = kind;
  f.ctx_ = ctx;
  f.grid_ = grid;
  f.values_ = std::move(values);
  return f;
}

RepFunction RepFunction::in_hermite(const RepContext& ctx, const Grid& grid, Eigen::VectorXcd coefficients) {
  if (!ctx.heisenberg_m || ctx.fiber_dim != 1)
    throw Error(ErrorKind::mode_mismatch, "hermite mode needs a Heisenberg representation");
  RepFunction f;
  f.mode_ = RepMode::hermite;
  f.ctx_ = ctx;
  f.grid_ = grid;
  f.coefficients_ = std::move(coefficients);
  return f;
}

RepFunction RepFunction::sample(const RepContext& ctx, const Grid& grid,
                                const std::function<std::complex<double>(double)>& f, DecayKind kind) {
  if (ctx.fiber_dim != 1) throw Error(ErrorKind::dimension_mismatch, "sample() produces scalar functions");
  Eigen::MatrixXcd v(grid.size, 1);
  for (int j = 0; j < grid.size; ++j) v(j, 0) = f(grid.node(j));
  return on_grid(ctx, grid, std::move(v), kind);
}

const Eigen::MatrixXcd& RepFunction::values() const {
  if (mode_ != RepMode::grid) throw Error(ErrorKind::mode_mismatch, "function is in hermite mode");
  return values_;
}

const Eigen::VectorXcd& RepFunction::coefficients() const {
  if (mode_ != RepMode::hermite) throw Error(ErrorKind::mode_mismatch, "function is in grid mode");
  return coefficients_;
}

double RepFunction::l2_norm() const {
  if (mode_ == RepMode::hermite) return coefficients_.norm();
  return std::sqrt(grid_.step()) * values_.norm();
}

Eigen::MatrixXd hermite_functions(double omega, int count, const Eigen::VectorXd& t) {
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(t.size(), count);
  if (count == 0) return psi;
  const double scale = std::sqrt(omega);
  const double norm0 = std::pow(omega / pi, 0.25);
  for (Eigen::Index j = 0; j < t.size(); ++j) {
    const double x = scale * t(j);
    double prev = 0.0;
    double cur = norm0 * std::exp(-0.5 * x * x);
    psi(j, 0) = cur;
    for (int n = 0; n + 1 < count; ++n) {
      const double next = std::sqrt(2.0 / (n + 1)) * x * cur - std::sqrt(static_cast<double>(n) / (n + 1)) * prev;
      prev = cur;
      cur = next;
      psi(j, n + 1) = cur;
    }
  }
  return psi;
}

double laplacian_eigenvalue(double m, int n) {
  return 2.0 * pi * std::abs(m) * (2 * n + 1) + 4.0 * pi * pi * m * m;
}

RepFunction to_grid(const RepFunction& f) {
  if (f.mode() == RepMode::grid) return f;
  const Eigen::VectorXcd& c = f.coefficients();
  const Eigen::MatrixXd psi =
      hermite_functions(f.context().oscillator_frequency(), static_cast<int>(c.size()), f.grid().nodes());
  Eigen::MatrixXcd values = psi.cast<std::complex<double>>() * c;
  return RepFunction::on_grid(f.context(), f.grid(), std::move(values), DecayKind::schwartz);
}

RepFunction to_hermite(const RepFunction& f, int count) {
  if (f.mode() == RepMode::hermite) return f;
  const double omega = f.context().oscillator_frequency();
  const Eigen::MatrixXd psi = hermite_functions(omega, count, f.grid().nodes());
  Eigen::VectorXcd c = f.grid().step() * (psi.transpose().cast<std::complex<double>>() * f.values().col(0));
  return RepFunction::in_hermite(f.context(), f.grid(), std::move(c));
}

}  // namespace nilcoh
