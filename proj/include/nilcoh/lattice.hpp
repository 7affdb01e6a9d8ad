#pragma once

#include "nilcoh/lie_algebra.hpp"

#include <string>
#include <vector>

namespace nilcoh {

/// The lattice Γ generated by exp(E_i) for a Malcev basis declared strongly
/// based at Γ; elements of Γ are exactly the products exp(s_1 E_1) ...
/// exp(s_d E_d) with integer s. The euclidean product makes the basis
/// orthonormal.
struct LatticeData {
  const AlgebraQ* algebra;

  /// Necessary conditions only: second-kind coordinates of exp(E_i) exp(E_j)
  /// and of the group commutators of generators must be integers. Returns a
  /// description of each failure; an empty list does not prove the basis is
  /// strongly based.
  std::vector<std::string> necessary_condition_failures() const;
};

}  // namespace nilcoh
