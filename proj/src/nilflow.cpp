#include "nilcoh/nilflow.hpp"

#include <fmt/format.h>

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nilcoh {

using std::numbers::pi;
using cd = std::complex<double>;

namespace {

double pairing(const std::vector<long>& m, const Eigen::VectorXd& v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) acc += static_cast<double>(m[i]) * v(static_cast<Eigen::Index>(i));
  return acc;
}

cd character_value(const std::vector<long>& m, const NilPoint& x) {
  const double phase = 2.0 * pi * pairing(m, x.coords);
  return {std::cos(phase), std::sin(phase)};
}

// ∫_0^h e^{2πiντ} dτ
cd exponential_integral(double nu, double h) {
  if (nu == 0.0) return h;
  const double half = pi * nu * h;
  return std::polar(std::sin(half) / (pi * nu), half);
}

}  // namespace

Observable Observable::constant() { return Observable{}; }

Observable Observable::character(std::vector<long> m) { return characters({{std::move(m), cd(1.0)}}); }

Observable Observable::characters(std::vector<Term> terms) {
  Observable o;
  o.kind_ = Kind::characters;
  o.terms_ = std::move(terms);
  return o;
}

Observable Observable::coboundary(std::vector<Term> potential) {
  Observable o = characters(std::move(potential));
  o.kind_ = Kind::coboundary;
  return o;
}

Observable Observable::custom(std::function<cd(const NilPoint&)> f, double frequency_bound) {
  Observable o;
  o.kind_ = Kind::custom;
  o.custom_ = std::move(f);
  o.custom_bandwidth_ = frequency_bound;
  return o;
}

cd Observable::operator()(const NilPoint& x, const Eigen::VectorXd& omega) const {
  switch (kind_) {
    case Kind::constant: return 1.0;
    case Kind::custom: return custom_(x);
    case Kind::characters:
    case Kind::coboundary: {
      cd acc = 0.0;
      for (const Term& t : terms_) {
        const cd factor = kind_ == Kind::coboundary ? cd(0.0, 2.0 * pi * pairing(t.m, omega)) : cd(1.0);
        acc += t.c * factor * character_value(t.m, x);
      }
      return acc;
    }
  }
  return 0.0;
}

cd Observable::potential(const NilPoint& x) const {
  if (kind_ != Kind::coboundary) throw Error(ErrorKind::invalid_argument, "only coboundary observables have a potential");
  cd acc = 0.0;
  for (const Term& t : terms_) acc += t.c * character_value(t.m, x);
  return acc;
}

double Observable::potential_sup_bound() const {
  double acc = 0.0;
  for (const Term& t : terms_) acc += std::abs(t.c);
  return acc;
}

double Observable::max_frequency(const Eigen::VectorXd& omega) const {
  if (kind_ == Kind::custom) return custom_bandwidth_;
  double out = 0.0;
  for (const Term& t : terms_) out = std::max(out, std::abs(pairing(t.m, omega)));
  return out;
}

NilflowSimulator::NilflowSimulator(const AlgebraQ& algebra) : alg_(algebra.cast<double>()) { require_bch_step(alg_); }

Eigen::VectorXd NilflowSimulator::to_log(const Eigen::VectorXd& s) const { return log_from_second_kind(alg_, s); }

Eigen::VectorXd NilflowSimulator::from_log(const Eigen::VectorXd& z) const { return second_kind_from_log(alg_, z); }

Eigen::VectorXd NilflowSimulator::reduce_with(const Eigen::VectorXd& coords, bool nearest) const {
  if (coords.size() != dim()) throw Error(ErrorKind::dimension_mismatch, "point has the wrong dimension");
  Eigen::VectorXd s = coords;
  for (int i = 0; i < dim(); ++i) {
    const double k = nearest ? std::round(s(i)) : std::floor(s(i));
    if (k == 0.0) continue;
    const double target = s(i) - k;
    const Eigen::VectorXd shift = -k * alg_.basis_vector(i);
    s = from_log(bch_multiply<double>(alg_, shift, to_log(s)));
    s(i) = target;
  }
  return s;
}

NilPoint NilflowSimulator::reduce(const Eigen::VectorXd& coords) const { return {reduce_with(coords, false)}; }

NilPoint NilflowSimulator::flow_step(const NilPoint& x, const Eigen::VectorXd& X, double t) const {
  if (X.size() != dim()) throw Error(ErrorKind::dimension_mismatch, "X has the wrong dimension");
  const Eigen::VectorXd tx = t * X;
  return reduce(from_log(bch_multiply<double>(alg_, to_log(x.coords), tx)));
}

double NilflowSimulator::coset_distance(const NilPoint& x, const NilPoint& y) const {
  const Eigen::VectorXd minus_x = -to_log(x.coords);
  const Eigen::VectorXd g = from_log(bch_multiply<double>(alg_, to_log(y.coords), minus_x));
  return reduce_with(g, true).cwiseAbs().maxCoeff();
}

double NilflowSimulator::jacobian_determinant(const Eigen::VectorXd& coords, const Eigen::VectorXd& X, double t,
                                              double h) const {
  const Eigen::VectorXd tx = t * X;
  auto map = [&](const Eigen::VectorXd& s) { return from_log(bch_multiply<double>(alg_, to_log(s), tx)); };
  auto jacobian = [&](double step) {
    Eigen::MatrixXd j(dim(), dim());
    for (int c = 0; c < dim(); ++c) {
      Eigen::VectorXd plus = coords, minus = coords;
      plus(c) += step;
      minus(c) -= step;
      j.col(c) = (map(plus) - map(minus)) / (2.0 * step);
    }
    return j;
  };
  // Richardson extrapolation removes the h² term; the map is polynomial.
  const Eigen::MatrixXd j = (4.0 * jacobian(h / 2) - jacobian(h)) / 3.0;
  return j.determinant();
}

Eigen::VectorXd NilflowSimulator::torus_coordinates(const NilPoint& x) const {
  return x.coords.head(alg_.generator_count());
}

cd NilflowSimulator::birkhoff_average(const NilPoint& x0, const Eigen::VectorXd& X, const Observable& obs, double T,
                                      double dt) const {
  if (!(T > 0.0) || !(dt > 0.0)) throw Error(ErrorKind::invalid_argument, "T and dt must be positive");
  const int n = alg_.generator_count();
  for (const auto& term : obs.terms())
    if (static_cast<int>(term.m.size()) != n)
      throw Error(ErrorKind::dimension_mismatch, fmt::format("characters need {} integer entries", n));
  const Eigen::VectorXd omega = X.head(n);
  if (obs.kind() == Observable::Kind::constant) return 1.0;
  const double nu_max = obs.max_frequency(omega);
  if (dt * nu_max > 0.5)
    throw Error(ErrorKind::under_resolved,
                fmt::format("dt * max frequency = {:.3g} exceeds 1/2; reduce dt", dt * nu_max));

  const auto steps = static_cast<long>(std::ceil(T / dt - 1e-9));
  NilPoint x = x0;
  cd total = 0.0;
  for (long k = 0; k < steps; ++k) {
    const double h = k + 1 < steps ? dt : T - static_cast<double>(steps - 1) * dt;
    switch (obs.kind()) {
      case Observable::Kind::constant: break;
      case Observable::Kind::characters:
      case Observable::Kind::coboundary:
        for (const auto& term : obs.terms()) {
          const double nu = pairing(term.m, omega);
          const cd factor = obs.kind() == Observable::Kind::coboundary ? cd(0.0, 2.0 * pi * nu) : cd(1.0);
          total += term.c * factor * character_value(term.m, x) * exponential_integral(nu, h);
        }
        break;
      case Observable::Kind::custom:
        total += boost::math::quadrature::gauss<double, 8>::integrate(
            [&](double tau) { return obs(flow_step(x, X, tau), omega); }, 0.0, h);
        break;
    }
    x = flow_step(x, X, h);
  }
  return total / T;
}

std::vector<EquidistributionRow> NilflowSimulator::equidistribution_report(const NilPoint& x0,
                                                                           const Eigen::VectorXd& X,
                                                                           const std::vector<std::vector<long>>& ms,
                                                                           const std::vector<double>& ts, double dt,
                                                                           double tolerance) const {
  const Eigen::VectorXd omega = X.head(alg_.generator_count());
  std::vector<EquidistributionRow> rows;
  for (const auto& m : ms) {
    if (std::all_of(m.begin(), m.end(), [](long v) { return v == 0; })) continue;
    for (double T : ts) {
      EquidistributionRow row;
      row.m = m;
      row.t = T;
      row.frequency = pairing(m, omega);
      row.measured = birkhoff_average(x0, X, Observable::character(m), T, dt);
      row.closed_form = character_value(m, x0) * exponential_integral(row.frequency, T) / T;
      row.error = std::abs(row.measured - row.closed_form);
      row.bound = row.frequency == 0.0 ? INFINITY : 1.0 / (pi * T * std::abs(row.frequency));
      row.pass = row.error <= tolerance && std::abs(row.measured) <= row.bound + tolerance;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace nilcoh
