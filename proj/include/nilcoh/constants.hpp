#pragma once

// Constants of the Sobolev estimates for the Green operator, computed by
// quadrature of their defining integrals. Values are memoized; the functions
// are safe to call from several threads.

namespace nilcoh {

/// C_α = (∫_ℝ (1 + 4π²s²)^{−α} ds)^{1/2}, finite for α > 1/2.
double c_alpha(double alpha);

/// C_{α,ℓ} = (2 ∫_0^∞ (2πu)^{2ℓ} ∫_u^∞ (1 + 4π²v²)^{−(ℓ+α)} dv du)^{1/2},
/// finite for α > 1 and ℓ ≥ 0.
double c_alpha_ell(double alpha, int ell);

}  // namespace nilcoh
