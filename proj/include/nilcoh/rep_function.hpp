#pragma once

#include "nilcoh/errors.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <optional>

// Vectors of H_π ≅ L²(ℝ, H′) for the adapted realization, in which π(X) = d/dt
// and π(Y) = 2πi b t. Two discretizations are provided: samples on a uniform
// periodic grid over [−L, L), and (Heisenberg only) coefficients in the
// Hermite eigenbasis of π(Δ).

namespace nilcoh {

struct Grid {
  double half_width = 12.0;
  int size = 4096;

  double step() const { return 2.0 * half_width / size; }
  double node(int j) const { return -half_width + j * step(); }
  Eigen::VectorXd nodes() const;
};

struct RepContext {
  /// b = B_λ(X, Y) for the unit Y; π(Y) = 2πi b t and δ = |b|.
  double coupling = 1.0;
  int fiber_dim = 1;
  /// Set for the Heisenberg representation π_m with X = E1, Y = E2, Z = E3.
  std::optional<double> heisenberg_m;

  double delta() const { return std::abs(coupling); }
  /// Frequency ω = 2π|m| of the oscillator −d²/dt² + 4π²m²t².
  double oscillator_frequency() const;
};

enum class RepMode { grid, hermite };

/// Asymptotic class of grid data: schwartz functions vanish at ±L; bounded
/// functions (outputs of the Green operator) start at 0 at −L and level off at
/// a constant at +L; tempered functions are anything else (e.g. t · bounded).
enum class DecayKind { schwartz, bounded, tempered };

class RepFunction {
 public:
  static RepFunction on_grid(const RepContext& ctx, const Grid& grid, Eigen::MatrixXcd values,
                             DecayKind kind = DecayKind::schwartz);
  static RepFunction in_hermite(const RepContext& ctx, const Grid& grid, Eigen::VectorXcd coefficients);

  /// Samples a scalar function on the grid (fiber dimension 1).
  static RepFunction sample(const RepContext& ctx, const Grid& grid,
                            const std::function<std::complex<double>(double)>& f,
                            DecayKind kind = DecayKind::schwartz);

  RepMode mode() const { return mode_; }
  DecayKind kind() const { return kind_; }
  const RepContext& context() const { return ctx_; }
  const Grid& grid() const { return grid_; }

  /// N × d′ samples; ModeMismatch in hermite mode.
  const Eigen::MatrixXcd& values() const;
  /// ModeMismatch in grid mode.
  const Eigen::VectorXcd& coefficients() const;

  /// Plain L² norm, by the rectangle rule in grid mode (spectrally accurate
  /// for periodic data) and by Parseval in hermite mode.
  double l2_norm() const;

 private:
  RepFunction() = default;

  RepMode mode_ = RepMode::grid;
  DecayKind kind_ = DecayKind::schwartz;
  RepContext ctx_;
  Grid grid_;
  Eigen::MatrixXcd values_;
  Eigen::VectorXcd coefficients_;
};

/// Normalized Hermite functions ψ_0..ψ_{count−1} of frequency ω at the points t
/// (one column per function), by the three-term recurrence.
Eigen::MatrixXd hermite_functions(double omega, int count, const Eigen::VectorXd& t);

/// Eigenvalue μ_n = 2π|m|(2n+1) + 4π²m² of π(Δ) = −X² − Y² − Z² on ψ_n.
double laplacian_eigenvalue(double m, int n);

/// Materializes a hermite-mode function on its grid; grid functions pass through.
RepFunction to_grid(const RepFunction& f);

/// Projects a grid function on ψ_0..ψ_{count−1}; requires a Heisenberg context.
RepFunction to_hermite(const RepFunction& f, int count);

}  // namespace nilcoh
