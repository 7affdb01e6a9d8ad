#pragma once

#include "nilcoh/rep_function.hpp"

namespace nilcoh {

struct SpectralTolerances {
  /// Schwartz data must satisfy |f(±L)| ≤ tail · max|f|.
  double tail = 1e-10;
  /// Largest admissible spectral amplitude in the top eighth of the band,
  /// relative to the largest amplitude.
  double resolution = 1e-11;
};

/// π(X) = d/dt. Grid mode uses the Fourier derivative on the periodized
/// window; bounded data has its jump between the window ends removed with the
/// Gaussian CDF first. Hermite mode uses the ladder recurrence. Errors:
/// TailCheckFailed, ResolutionLoss.
RepFunction apply_X(const RepFunction& f, const SpectralTolerances& tol = {});

/// π(Y) = 2πi b t.
RepFunction apply_Y(const RepFunction& f);

/// Multiplication by a scalar function of t (grid mode).
RepFunction multiply(const RepFunction& f, const std::function<std::complex<double>(double)>& p, DecayKind kind);

/// (G f)(t) = ∫_{−L}^t f(s) ds. The mass c = ∫ f is carried by c·Φ with Φ the
/// CDF of e^{−πt²}; the remainder is integrated spectrally. The result has
/// DecayKind::bounded. Hermite data is materialized on its grid first.
RepFunction green(const RepFunction& f, const SpectralTolerances& tol = {});

/// D_e(f) = ∫ ⟨f(t), e⟩ dt.
std::complex<double> invariant_distribution(const RepFunction& f, int e = 0);

/// ‖(I − π(Y)²)^{α/2} f‖, the L² norm of (1 + 4π²b²t²)^{α/2} f.
double y_sobolev_norm(const RepFunction& f, double alpha);

/// ‖(I + π(Δ))^{α/2} f‖ in the Hermite eigenbasis; ModeMismatch on grid data.
double full_sobolev_norm(const RepFunction& f, double alpha);

/// sup_t |(1 + t²)^{j/2} f^{(i)}(t)| on the grid.
double schwartz_seminorm(const RepFunction& f, int i, int j, const SpectralTolerances& tol = {});

}  // namespace nilcoh
