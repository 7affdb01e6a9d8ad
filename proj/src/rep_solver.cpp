#include "nilcoh/rep_solver.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <vector>

namespace nilcoh {

using std::numbers::pi;
using cd = std::complex<double>;

namespace {

double gaussian(double t) { return std::exp(-pi * t * t); }
double gaussian_cdf(double t) { return 0.5 * std::erfc(-std::sqrt(pi) * t); }

// Signed wavenumber of FFT bin k; the Nyquist bin gets 0.
double wavenumber(int k, int n, double half_width) {
  if (2 * k == n) return 0.0;
  const int signed_k = 2 * k < n ? k : k - n;
  return pi * signed_k / half_width;
}

std::vector<cd> forward(const Eigen::VectorXcd& v) {
  Eigen::FFT<double> fft;
  std::vector<cd> in(v.data(), v.data() + v.size()), out;
  fft.fwd(out, in);
  return out;
}

Eigen::VectorXcd inverse(const std::vector<cd>& spectrum) {
  Eigen::FFT<double> fft;
  std::vector<cd> out;
  fft.inv(out, spectrum);
  return Eigen::Map<Eigen::VectorXcd>(out.data(), static_cast<Eigen::Index>(out.size()));
}

// The amplitude in the top band |k| >= 3N/8 must stay below tol times the
// peak, or below tol times reference_peak when that is larger.
void check_resolution(const std::vector<cd>& spectrum, double tol, double reference_peak = 0.0) {
  const int n = static_cast<int>(spectrum.size());
  double top = 0.0, peak = 0.0;
  for (int k = 0; k < n; ++k) {
    const int signed_k = 2 * k <= n ? k : n - k;
    const double a = std::abs(spectrum[static_cast<std::size_t>(k)]);
    peak = std::max(peak, a);
    if (8 * signed_k >= 3 * n) top = std::max(top, a);
  }
  peak = std::max(peak, reference_peak);
  if (peak > 0 && top > tol * peak)
    throw Error(ErrorKind::resolution_loss, "spectral amplitude near the Nyquist band is " + std::to_string(top / peak) +
                                                " of the peak; refine the grid");
}

double spectral_peak(const Eigen::VectorXcd& v) {
  double peak = 0.0;
  for (const cd& a : forward(v)) peak = std::max(peak, std::abs(a));
  return peak;
}

Eigen::VectorXcd spectral_derivative(const Eigen::VectorXcd& v, double half_width, double tol,
                                     double reference_peak = 0.0) {
  std::vector<cd> s = forward(v);
  check_resolution(s, tol, reference_peak);
  const int n = static_cast<int>(s.size());
  for (int k = 0; k < n; ++k) s[static_cast<std::size_t>(k)] *= cd(0.0, wavenumber(k, n, half_width));
  return inverse(s);
}

// Periodic antiderivative of mean-zero data.
Eigen::VectorXcd spectral_antiderivative(const Eigen::VectorXcd& v, double half_width, double tol,
                                         double reference_peak) {
  std::vector<cd> s = forward(v);
  check_resolution(s, tol, reference_peak);
  const int n = static_cast<int>(s.size());
  for (int k = 0; k < n; ++k) {
    const double w = wavenumber(k, n, half_width);
    s[static_cast<std::size_t>(k)] = w == 0.0 ? cd(0.0) : s[static_cast<std::size_t>(k)] / cd(0.0, w);
  }
  return inverse(s);
}

void check_tails(const Eigen::VectorXcd& v, double tol) {
  const double peak = v.cwiseAbs().maxCoeff();
  const double ends = std::max(std::abs(v(0)), std::abs(v(v.size() - 1)));
  if (peak == 0.0) return;
  if (ends > tol * peak)
    throw Error(ErrorKind::tail_check_failed, "data does not decay at the window edges (|f(±L)|/max|f| = " +
                                                  std::to_string(ends / peak) + ")");
}

RepFunction hermite_apply_x(const RepFunction& f) {
  const Eigen::VectorXcd& c = f.coefficients();
  const double omega = f.context().oscillator_frequency();
  const double s = std::sqrt(omega / 2.0);
  const Eigen::Index n = c.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n + 1);
  // ψ_n′ = sqrt(ω/2) (√n ψ_{n−1} − √(n+1) ψ_{n+1})
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k > 0) out(k - 1) += s * std::sqrt(static_cast<double>(k)) * c(k);
    out(k + 1) -= s * std::sqrt(static_cast<double>(k + 1)) * c(k);
  }
  return RepFunction::in_hermite(f.context(), f.grid(), std::move(out));
}

RepFunction hermite_apply_y(const RepFunction& f) {
  const Eigen::VectorXcd& c = f.coefficients();
  const double omega = f.context().oscillator_frequency();
  const double s = 1.0 / std::sqrt(2.0 * omega);
  const Eigen::Index n = c.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n + 1);
  // t ψ_n = (√n ψ_{n−1} + √(n+1) ψ_{n+1}) / sqrt(2ω)
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k > 0) out(k - 1) += s * std::sqrt(static_cast<double>(k)) * c(k);
    out(k + 1) += s * std::sqrt(static_cast<double>(k + 1)) * c(k);
  }
  out *= cd(0.0, 2.0 * pi * f.context().coupling);
  return RepFunction::in_hermite(f.context(), f.grid(), std::move(out));
}

}  // namespace

RepFunction apply_X(const RepFunction& f, const SpectralTolerances& tol) {
  if (f.mode() == RepMode::hermite) return hermite_apply_x(f);
  if (f.kind() == DecayKind::tempered)
    throw Error(ErrorKind::tail_check_failed, "d/dt needs Schwartz or bounded data on the window");
  const Grid& grid = f.grid();
  const Eigen::VectorXd t = grid.nodes();
  Eigen::MatrixXcd out(grid.size, f.values().cols());
  for (Eigen::Index c = 0; c < f.values().cols(); ++c) {
    Eigen::VectorXcd v = f.values().col(c);
    if (f.kind() == DecayKind::schwartz) {
      check_tails(v, tol.tail);
      out.col(c) = spectral_derivative(v, grid.half_width, tol.resolution);
      continue;
    }
    const double reference = spectral_peak(v);
    const cd start = v(0);
    const cd jump = v(grid.size - 1) - v(0);
    for (int j = 0; j < grid.size; ++j) v(j) -= start + jump * gaussian_cdf(t(j));
    Eigen::VectorXcd d = spectral_derivative(v, grid.half_width, tol.resolution, reference);
    for (int j = 0; j < grid.size; ++j) d(j) += jump * gaussian(t(j));
    out.col(c) = d;
  }
  return RepFunction::on_grid(f.context(), grid, std::move(out), DecayKind::schwartz);
}

RepFunction apply_Y(const RepFunction& f) {
  if (f.mode() == RepMode::hermite) return hermite_apply_y(f);
  const double b = f.context().coupling;
  const DecayKind kind = f.kind() == DecayKind::schwartz ? DecayKind::schwartz : DecayKind::tempered;
  return multiply(f, [b](double t) { return cd(0.0, 2.0 * pi * b * t); }, kind);
}

RepFunction multiply(const RepFunction& f, const std::function<cd(double)>& p, DecayKind kind) {
  const RepFunction g = to_grid(f);
  Eigen::MatrixXcd out = g.values();
  for (int j = 0; j < g.grid().size; ++j) out.row(j) *= p(g.grid().node(j));
  return RepFunction::on_grid(g.context(), g.grid(), std::move(out), kind);
}

RepFunction green(const RepFunction& f, const SpectralTolerances& tol) {
  const RepFunction g = to_grid(f);
  if (g.kind() != DecayKind::schwartz)
    throw Error(ErrorKind::tail_check_failed, "the Green operator needs integrable (Schwartz) data");
  const Grid& grid = g.grid();
  const double h = grid.step();
  const Eigen::VectorXd t = grid.nodes();
  Eigen::VectorXd phi(grid.size), cdf(grid.size);
  for (int j = 0; j < grid.size; ++j) {
    phi(j) = gaussian(t(j));
    cdf(j) = gaussian_cdf(t(j));
  }
  const double phi_mass = h * phi.sum();

  Eigen::MatrixXcd out(grid.size, g.values().cols());
  for (Eigen::Index c = 0; c < g.values().cols(); ++c) {
    const Eigen::VectorXcd v = g.values().col(c);
    check_tails(v, tol.tail);
    const cd mass = h * v.sum() / phi_mass;
    const Eigen::VectorXcd rest = v - mass * phi.cast<cd>();
    Eigen::VectorXcd a = spectral_antiderivative(rest, grid.half_width, tol.resolution, spectral_peak(v));
    const cd a0 = a(0);
    for (int j = 0; j < grid.size; ++j) a(j) += -a0 + mass * cdf(j);
    out.col(c) = a;
  }
  return RepFunction::on_grid(g.context(), grid, std::move(out), DecayKind::bounded);
}

cd invariant_distribution(const RepFunction& f, int e) {
  const RepFunction g = to_grid(f);
  if (e < 0 || e >= g.values().cols()) throw Error(ErrorKind::invalid_argument, "fiber index out of range");
  return g.grid().step() * g.values().col(e).sum();
}

double y_sobolev_norm(const RepFunction& f, double alpha) {
  const RepFunction g = to_grid(f);
  const double b = g.context().coupling;
  double total = 0.0;
  for (int j = 0; j < g.grid().size; ++j) {
    const double t = g.grid().node(j);
    const double w = std::pow(1.0 + 4.0 * pi * pi * b * b * t * t, alpha);
    total += w * g.values().row(j).squaredNorm();
  }
  return std::sqrt(g.grid().step() * total);
}

double full_sobolev_norm(const RepFunction& f, double alpha) {
  if (f.mode() != RepMode::hermite)
    throw Error(ErrorKind::mode_mismatch, "the full Sobolev norm is computed in the Hermite basis");
  const double m = *f.context().heisenberg_m;
  const Eigen::VectorXcd& c = f.coefficients();
  double total = 0.0;
  for (Eigen::Index n = 0; n < c.size(); ++n)
    total += std::pow(1.0 + laplacian_eigenvalue(m, static_cast<int>(n)), alpha) * std::norm(c(n));
  return std::sqrt(total);
}

double schwartz_seminorm(const RepFunction& f, int i, int j, const SpectralTolerances& tol) {
  RepFunction d = to_grid(f);
  for (int k = 0; k < i; ++k) d = apply_X(d, tol);
  double sup = 0.0;
  for (int n = 0; n < d.grid().size; ++n) {
    const double t = d.grid().node(n);
    sup = std::max(sup, std::pow(1.0 + t * t, 0.5 * j) * d.values().row(n).norm());
  }
  return sup;
}

}  // namespace nilcoh
