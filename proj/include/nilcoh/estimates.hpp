#pragma once

#include "nilcoh/coadjoint.hpp"
#include "nilcoh/rep_solver.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace nilcoh {

struct EstimateOptions {
  /// A bound lhs ≤ rhs counts as violated only past rhs · (1 + slack) + floor.
  double relative_slack = 1e-9;
  double absolute_floor = 1e-14;
  /// D_e(f) counts as zero below zero_tol · ‖f‖.
  double zero_tol = 1e-9;
};

struct EstimateCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;

  double ratio() const { return rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? INFINITY : 0.0); }
};

/// |D_e(f)| ≤ C_α δ^{−1/2} ‖(I − π(Y)²)^{α/2} f‖ for α > 1/2. Throws
/// EstimateViolated when the measured value exceeds the bound.
EstimateCheck check_invdist_estimate(const RepFunction& f, double alpha, int e = 0, const EstimateOptions& opts = {});

struct GreenEstimateReport {
  /// ‖G f‖_β ≤ C_α C_{−β} δ^{−1} ‖f‖_α, Y-weighted norms, α > 1/2 > −β.
  EstimateCheck part1;
  std::vector<std::complex<double>> obstructions;
  bool obstruction_free = false;
  /// ‖π(Y)^ℓ G f‖ ≤ C_{α,ℓ} δ^{−1} ‖f‖_{ℓ+α}, one entry per requested ℓ;
  /// empty unless part 2 ran.
  std::vector<std::pair<int, EstimateCheck>> part2;
};

/// Part 1 always runs. Part 2 runs when the data is obstruction free; with
/// require_part2 set, nonzero obstructions raise ObstructionNonzero instead.
GreenEstimateReport check_green_estimates(const RepFunction& f, double alpha, double beta,
                                          const std::vector<int>& ells = {0, 1, 2}, bool require_part2 = false,
                                          const EstimateOptions& opts = {});

/// Term-by-term check of the identity
///   P · G f = Σ_m (2πib)^{−m} Σ_{j+ℓ=m} (−1)^ℓ / (j! ℓ!) π(Y)^j G[π(Y)^ℓ P^{(m)} f]
/// for a polynomial multiplier P(t) = Σ_r p_r t^r.
struct CommutatorExpansion {
  double lhs_norm = 0.0;
  double residual = 0.0;  // relative, in the window L² norm
  std::vector<double> term_norms;
  /// All G-inputs π(Y)^ℓ P^{(m)} f have vanishing invariant distribution.
  bool inputs_obstruction_free = true;
};

CommutatorExpansion commutator_expansion(const RepFunction& f, const std::vector<std::complex<double>>& poly,
                                         const EstimateOptions& opts = {});

/// The chain δ_O(X) ≥ |B_λ(X, Y)| = |⟨M_Y, Ω⟩| ≥ K / |M_Y|^{n−1+τ} and the
/// resulting δ_O(X)^{−1} ‖f‖ ≤ K^{−1} ‖f‖_{n−1+τ} for Y running over the
/// basis of the last but one layer.
struct LowerBoundChain {
  int y_index = -1;
  std::vector<Rational> m_y;
  double delta = 0.0;
  double b_xy = 0.0;
  double dc_bound = 0.0;  // K / |M_Y|_∞^s
  double sobolev_order = 0.0;
  double lhs = 0.0;       // δ^{−1} ‖f‖
  double middle = 0.0;    // K^{−1} |M_Y|_2^s ‖f‖
  double rhs = 0.0;       // K^{−1} ‖f‖_s
};

/// Errors: NonIntegerMY, NotWeaklyIntegral, NotMaximalRank, EstimateViolated
/// (with the failing link in the message); ModeMismatch unless f is in
/// hermite mode.
LowerBoundChain diophantine_lower_bound_check(const AlgebraQ& alg, const LinearForm<Rational>& lambda,
                                              const Eigen::VectorXd& x, double k_constant, double tau,
                                              const RepFunction& f, const EstimateOptions& opts = {});

struct GlobalComponent {
  std::string label;
  RepFunction f;
};

struct GlobalSolveOptions {
  double alpha = 3.0;
  double beta = -1.0;
  int generators = 2;
  double tau = 0.0;
  bool require_part2 = false;
  std::vector<int> ells{0, 1, 2};
  EstimateOptions estimates;
};

struct ComponentResult {
  std::string label;
  RepFunction u;
  std::complex<double> obstruction;
  double f_norm_alpha = 0.0;
  double u_norm_beta = 0.0;
  double ratio = 0.0;
  GreenEstimateReport estimates;
};

struct GlobalSolveResult {
  std::vector<ComponentResult> components;
  double f_norm_alpha = 0.0;
  double u_norm_beta = 0.0;
  /// max_i ‖u_i‖_β / ‖f_i‖_α
  double uniform_bound = 0.0;
};

/// Solves each component with the Green operator and assembles the orthogonal
/// sum. Requires α > n + τ − 1/2 and β < −1/2. Component errors are rethrown
/// with the component index attached.
GlobalSolveResult global_solve(const std::vector<GlobalComponent>& components, const GlobalSolveOptions& opts);

/// ‖G f‖_β against the envelope max{1, w_k^β} max{1, δ^{−1−kβ}} ‖f‖_α over the
/// Heisenberg family π_m (X = E1, Y = E2, k = 2, δ = w_k = |m|), with the same
/// data f(t) for every m. Full Sobolev norms are taken in the Hermite basis.
struct ScalingRow {
  double m = 0.0;
  double envelope = 0.0;
  double green_norm = 0.0;  // ‖G f‖_β
  double data_norm = 0.0;   // ‖f‖_α
  double ratio = 0.0;       // green_norm / (envelope · data_norm)
};

struct ScalingReport {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<ScalingRow> rows;
  /// The ratio at the first m, times the slack factor.
  double calibrated_bound = 0.0;
  bool within_slack = false;
};

/// Requires α > β > 0 and α > 1 + 2β. Throws ResolutionLoss when the Hermite
/// projection loses more than 1e−10 of the L² norm of f or G f.
ScalingReport sobolev_scaling_family(const std::function<std::complex<double>(double)>& f,
                                     const std::vector<double>& ms, double alpha, double beta, const Grid& grid,
                                     int hermite_count = 512, double slack = 10.0);

}  // namespace nilcoh
