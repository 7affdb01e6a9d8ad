#pragma once

#include "nilcoh/lie_algebra.hpp"

#include <filesystem>
#include <string>

// Algebra definition files (".alg") are YAML documents:
//
//   name: heisenberg
//   dim: 3
//   step: 2
//   layers: [2, 1]
//   labels: [X, Y, Z]          # optional
//   brackets:
//     - [1, 2, 3, "1"]          # [E1, E2] = 1 * E3, indices 1-based
//
// Omitted brackets are zero; coefficients use the exact syntax p/q.

namespace nilcoh {

AlgebraQ parse_algebra(const std::string& text);

/// Throws Error(ErrorKind::invalid_argument) when the file cannot be read.
AlgebraQ load_algebra(const std::filesystem::path& path);

std::string format_algebra(const AlgebraQ& alg);

}  // namespace nilcoh
