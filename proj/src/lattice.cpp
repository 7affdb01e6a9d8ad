#include "nilcoh/lattice.hpp"

#include "nilcoh/bch.hpp"

namespace nilcoh {

namespace {

bool all_integer(const VectorQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integer(v(i))) return false;
  return true;
}

}  // namespace

std::vector<std::string> LatticeData::necessary_condition_failures() const {
  const AlgebraQ& alg = *algebra;
  std::vector<std::string> failures;
  if (alg.step() > max_bch_step) {
    failures.push_back("step above 4: lattice closure not checked");
    return failures;
  }
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      if (i == j) continue;
      const VectorQ ei = alg.basis_vector(i), ej = alg.basis_vector(j);
      const std::string pair = "(" + alg.labels()[static_cast<std::size_t>(i)] + ", " +
                               alg.labels()[static_cast<std::size_t>(j)] + ")";
      if (!all_integer(second_kind_from_log(alg, bch_multiply(alg, ei, ej))))
        failures.push_back("product of generators " + pair + " leaves the integer Malcev words");
      if (i < j && !all_integer(second_kind_from_log(alg, group_commutator(alg, ei, ej))))
        failures.push_back("group commutator of generators " + pair + " leaves the integer Malcev words");
    }
  return failures;
}

}  // namespace nilcoh
