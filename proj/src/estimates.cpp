#include "nilcoh/estimates.hpp"

#include "nilcoh/constants.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nilcoh {

using std::numbers::pi;
using cd = std::complex<double>;

namespace {

EstimateCheck make_check(std::string name, double lhs, double rhs, double constant) {
  EstimateCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.constant = constant;
  return c;
}

void enforce(const EstimateCheck& c, const EstimateOptions& opts) {
  if (c.lhs > c.rhs * (1.0 + opts.relative_slack) + opts.absolute_floor)
    throw Error(ErrorKind::estimate_violated,
                fmt::format("{}: measured {:.17g} exceeds bound {:.17g} (ratio {:.6g})", c.name, c.lhs, c.rhs, c.ratio()));
}

std::string strip_kind(const Error& e) {
  const std::string what = e.what();
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

RepFunction polynomial_multiple(const RepFunction& f, const std::vector<cd>& poly) {
  return multiply(
      f,
      [&poly](double t) {
        cd acc = 0.0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * t + *it;
        return acc;
      },
      f.kind());
}

std::vector<cd> derivative(const std::vector<cd>& poly) {
  std::vector<cd> out;
  for (std::size_t r = 1; r < poly.size(); ++r) out.push_back(static_cast<double>(r) * poly[r]);
  return out;
}

RepFunction apply_Y_power(RepFunction f, int power) {
  for (int i = 0; i < power; ++i) f = apply_Y(f);
  return f;
}

double window_norm(const Eigen::MatrixXcd& v, double step) { return std::sqrt(step) * v.norm(); }

}  // namespace

EstimateCheck check_invdist_estimate(const RepFunction& f, double alpha, int e, const EstimateOptions& opts) {
  const double constant = c_alpha(alpha);
  const double delta = f.context().delta();
  if (delta <= 0.0) throw Error(ErrorKind::invalid_argument, "the estimate needs delta > 0");
  const double lhs = std::abs(invariant_distribution(f, e));
  const double rhs = constant / std::sqrt(delta) * y_sobolev_norm(f, alpha);
  EstimateCheck c = make_check("invariant distribution", lhs, rhs, constant);
  enforce(c, opts);
  return c;
}

GreenEstimateReport check_green_estimates(const RepFunction& f, double alpha, double beta, const std::vector<int>& ells,
                                          bool require_part2, const EstimateOptions& opts) {
  if (!(alpha > 0.5) || !(beta < -0.5))
    throw Error(ErrorKind::invalid_argument, "the Green estimate needs alpha > 1/2 and beta < -1/2");
  const double delta = f.context().delta();
  if (delta <= 0.0) throw Error(ErrorKind::invalid_argument, "the estimate needs delta > 0");

  GreenEstimateReport report;
  const RepFunction u = green(f);
  const double constant = c_alpha(alpha) * c_alpha(-beta);
  report.part1 = make_check("Green part 1", y_sobolev_norm(u, beta), constant / delta * y_sobolev_norm(f, alpha),
                            constant);
  enforce(report.part1, opts);

  const double norm = f.l2_norm();
  const int fiber = f.mode() == RepMode::grid ? static_cast<int>(f.values().cols()) : 1;
  report.obstruction_free = true;
  for (int e = 0; e < fiber; ++e) {
    report.obstructions.push_back(invariant_distribution(f, e));
    if (std::abs(report.obstructions.back()) > opts.zero_tol * norm) report.obstruction_free = false;
  }
  if (!report.obstruction_free) {
    if (require_part2) {
      double worst = 0.0;
      for (const cd& d : report.obstructions) worst = std::max(worst, std::abs(d));
      throw Error(ErrorKind::obstruction_nonzero,
                  fmt::format("|D(f)| = {:.6g} exceeds {:.3g} * ||f||; part 2 does not apply", worst, opts.zero_tol));
    }
    return report;
  }
  if (!(alpha > 1.0)) {
    if (require_part2) throw Error(ErrorKind::invalid_argument, "part 2 of the Green estimate needs alpha > 1");
    return report;
  }

  for (int ell : ells) {
    const double c_ell = c_alpha_ell(alpha, ell);
    const RepFunction lhs_vec = to_grid(apply_Y_power(u, ell));
    EstimateCheck c = make_check(fmt::format("Green part 2, l={}", ell), lhs_vec.l2_norm(),
                                 c_ell / delta * y_sobolev_norm(f, ell + alpha), c_ell);
    enforce(c, opts);
    report.part2.emplace_back(ell, c);
  }
  return report;
}

CommutatorExpansion commutator_expansion(const RepFunction& f0, const std::vector<cd>& poly,
                                         const EstimateOptions& opts) {
  const RepFunction f = to_grid(f0);
  const double b = f.context().coupling;
  if (b == 0.0) throw Error(ErrorKind::invalid_argument, "the expansion needs a nonzero coupling");
  const double h = f.grid().step();
  CommutatorExpansion out;

  const Eigen::MatrixXcd lhs = polynomial_multiple(green(f), poly).values();
  out.lhs_norm = window_norm(lhs, h);

  Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(lhs.rows(), lhs.cols());
  std::vector<cd> p_m = poly;
  const cd two_pi_ib(0.0, 2.0 * pi * b);
  for (int m = 0; !p_m.empty(); ++m, p_m = derivative(p_m)) {
    const RepFunction pf = polynomial_multiple(f, p_m);
    for (int ell = 0; ell <= m; ++ell) {
      const int j = m - ell;
      const RepFunction input = apply_Y_power(pf, ell);
      if (std::abs(invariant_distribution(input)) > opts.zero_tol * std::max(input.l2_norm(), 1e-300))
        out.inputs_obstruction_free = false;
      const RepFunction term = apply_Y_power(green(input), j);
      const cd scale = std::pow(two_pi_ib, -m) * ((ell % 2 == 0) ? 1.0 : -1.0) / (factorial(j) * factorial(ell));
      const Eigen::MatrixXcd contribution = scale * term.values();
      out.term_norms.push_back(window_norm(contribution, h));
      rhs += contribution;
    }
  }
  out.residual = window_norm(lhs - rhs, h) / std::max(out.lhs_norm, 1e-300);
  return out;
}

LowerBoundChain diophantine_lower_bound_check(const AlgebraQ& alg, const LinearForm<Rational>& lambda,
                                              const Eigen::VectorXd& x, double k_constant, double tau,
                                              const RepFunction& f, const EstimateOptions& opts) {
  if (lambda.size() != alg.dim() || x.size() != alg.dim())
    throw Error(ErrorKind::dimension_mismatch, "lambda and X must have the algebra's dimension");
  if (alg.step() < 2) throw Error(ErrorKind::not_maximal_rank, "abelian algebras have no maximal rank orbits");
  if (!(k_constant > 0.0)) throw Error(ErrorKind::invalid_argument, "the Diophantine constant K must be positive");
  if (f.mode() != RepMode::hermite)
    throw Error(ErrorKind::mode_mismatch, "the chain uses the full Sobolev norm; pass hermite-mode data");

  const int n = alg.generator_count();
  const int first = alg.layer_offset(alg.step() - 1);
  const int last = alg.layer_offset(alg.step());
  std::vector<std::pair<int, VectorQ>> candidates;
  for (int y = first; y < last; ++y) {
    VectorQ m(n);
    for (int i = 0; i < n; ++i) {
      m(i) = b_form(alg, lambda, alg.basis_vector(i), alg.basis_vector(y));
      if (!is_integer(m(i)))
        throw Error(ErrorKind::non_integer_my, fmt::format("B_lambda(E{}, E{}) = {} is not an integer", i + 1, y + 1,
                                                           to_string(m(i))));
    }
    if (!is_zero_matrix(m)) candidates.emplace_back(y, m);
  }
  const LatticeData lattice{&alg};
  if (!weakly_integral(lattice, lambda))
    throw Error(ErrorKind::not_weakly_integral, "lambda is not integral on log Z(Gamma)");
  if (candidates.empty())
    throw Error(ErrorKind::not_maximal_rank, "M_Y vanishes for every Y in the last but one layer");

  const Eigen::VectorXd lambda_d = to_double(lambda);
  const OrbitInvariants<double> inv = orbit_invariants<double>(alg.cast<double>(), lambda_d, x);
  const double s = n - 1 + tau;
  const double f_norm = f.l2_norm();
  const double f_norm_s = full_sobolev_norm(f, s);

  LowerBoundChain best;
  for (const auto& [y, m] : candidates) {
    LowerBoundChain c;
    c.y_index = y;
    c.m_y.assign(m.data(), m.data() + m.size());
    c.delta = inv.delta;
    c.b_xy = std::abs(lambda_d.dot(alg.cast<double>().bracket(x, unit_vector<double>(alg.dim(), y))));
    const Eigen::VectorXd md = to_double(m);
    c.dc_bound = k_constant / std::pow(md.cwiseAbs().maxCoeff(), s);
    c.sobolev_order = s;
    c.lhs = f_norm / c.delta;
    c.middle = std::pow(md.norm(), s) * f_norm / k_constant;
    c.rhs = f_norm_s / k_constant;

    const double slack = 1.0 + opts.relative_slack;
    auto link = [&](const char* name, double small, double large) {
      if (small > large * slack + opts.absolute_floor)
        throw Error(ErrorKind::estimate_violated,
                    fmt::format("{} fails for Y = E{}: {:.17g} > {:.17g}", name, y + 1, small, large));
    };
    link("delta >= |B(X,Y)|", c.b_xy, c.delta);
    link("|B(X,Y)| >= K/|M_Y|^s", c.dc_bound, c.b_xy);
    link("delta^-1 ||f|| <= K^-1 |M_Y|^s ||f||", c.lhs, c.middle);
    link("|M_Y|^s ||f|| <= ||f||_s", c.middle, c.rhs);
    if (best.y_index < 0 || c.b_xy > best.b_xy) best = std::move(c);
  }
  return best;
}

GlobalSolveResult global_solve(const std::vector<GlobalComponent>& components, const GlobalSolveOptions& opts) {
  if (!(opts.alpha > opts.generators + opts.tau - 0.5))
    throw Error(ErrorKind::invalid_argument, "global assembly needs alpha > n + tau - 1/2");
  if (!(opts.beta < -0.5)) throw Error(ErrorKind::invalid_argument, "global assembly needs beta < -1/2");

  GlobalSolveResult out;
  double f_sq = 0.0, u_sq = 0.0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const GlobalComponent& comp = components[i];
    try {
      ComponentResult r{comp.label, green(comp.f), invariant_distribution(comp.f), 0.0, 0.0, 0.0, {}};
      r.f_norm_alpha = y_sobolev_norm(comp.f, opts.alpha);
      r.u_norm_beta = y_sobolev_norm(r.u, opts.beta);
      r.ratio = r.f_norm_alpha > 0.0 ? r.u_norm_beta / r.f_norm_alpha : 0.0;
      r.estimates =
          check_green_estimates(comp.f, opts.alpha, opts.beta, opts.ells, opts.require_part2, opts.estimates);
      f_sq += r.f_norm_alpha * r.f_norm_alpha;
      u_sq += r.u_norm_beta * r.u_norm_beta;
      out.uniform_bound = std::max(out.uniform_bound, r.ratio);
      out.components.push_back(std::move(r));
    } catch (const Error& e) {
      throw Error(e.kind(), fmt::format("component {} ({}): {}", i, comp.label, strip_kind(e)), i);
    }
  }
  out.f_norm_alpha = std::sqrt(f_sq);
  out.u_norm_beta = std::sqrt(u_sq);
  return out;
}

ScalingReport sobolev_scaling_family(const std::function<cd(double)>& f, const std::vector<double>& ms, double alpha,
                                     double beta, const Grid& grid, int hermite_count, double slack) {
  if (!(beta > 0.0) || !(alpha > beta) || !(alpha > 1.0 + 2.0 * beta))
    throw Error(ErrorKind::invalid_argument, "the scaling law needs alpha > beta > 0 and alpha > 1 + 2 beta");
  constexpr int k = 2;
  ScalingReport report;
  report.alpha = alpha;
  report.beta = beta;
  auto project = [hermite_count](const RepFunction& g) {
    const RepFunction h = to_hermite(g, hermite_count);
    const double lost = std::abs(g.l2_norm() - h.l2_norm()) / std::max(g.l2_norm(), 1e-300);
    if (lost > 1e-10)
      throw Error(ErrorKind::resolution_loss,
                  fmt::format("Hermite projection keeps all but {:.3g} of the norm; raise the coefficient count", lost));
    return h;
  };
  for (double m : ms) {
    RepContext ctx;
    ctx.coupling = m;
    ctx.heisenberg_m = m;
    const RepFunction data = RepFunction::sample(ctx, grid, f);
    const RepFunction u = green(data);
    ScalingRow row;
    row.m = m;
    const double w = std::abs(m), delta = std::abs(m);
    row.envelope = std::max(1.0, std::pow(w, beta)) * std::max(1.0, std::pow(delta, -1.0 - k * beta));
    row.green_norm = full_sobolev_norm(project(u), beta);
    row.data_norm = full_sobolev_norm(project(data), alpha);
    row.ratio = row.green_norm / (row.envelope * row.data_norm);
    report.rows.push_back(row);
  }
  if (!report.rows.empty()) report.calibrated_bound = slack * report.rows.front().ratio;
  report.within_slack = std::all_of(report.rows.begin(), report.rows.end(),
                                    [&](const ScalingRow& r) { return r.ratio <= report.calibrated_bound; });
  return report;
}

}  // namespace nilcoh
