#pragma once

#include "nilcoh/rep_function.hpp"

#include <string>
#include <string_view>
#include <vector>

// Symbolic data for the cohomological equation: finite sums of terms
//
//   [c *] [t^p *] envelope
//
// with c rational, envelope one of gaussian(a) = e^{−πat²},
// dgaussian(a) = d/dt gaussian(a), hermite(n) = ψ_n for the representation's
// oscillator frequency, or absent. The argument of gaussian/dgaussian
// defaults to 1; factors may appear in any order, e.g.
// "2*gaussian - 1/3*t^2*gaussian(2) + hermite(1)".

namespace nilcoh {

struct RecipeTerm {
  enum class Envelope { none, gaussian, hermite };
  double coefficient = 1.0;
  int power = 0;
  Envelope envelope = Envelope::none;
  double rate = 1.0;  // gaussian(a)
  int index = 0;      // hermite(n)
};

class Recipe {
 public:
  Recipe() = default;
  explicit Recipe(std::vector<RecipeTerm> terms) : terms_(std::move(terms)) {}

  /// Throws ErrorKind::parse on malformed input.
  static Recipe parse(std::string_view text);

  const std::vector<RecipeTerm>& terms() const { return terms_; }
  bool uses_hermite() const;

  /// Value at t; omega is the oscillator frequency used by hermite terms.
  std::complex<double> operator()(double t, double omega = 0.0) const;

  Recipe derivative(double omega = 0.0) const;

  std::string to_string() const;

 private:
  std::vector<RecipeTerm> terms_;
};

RepFunction sample_recipe(const Recipe& recipe, const RepContext& ctx, const Grid& grid);

}  // namespace nilcoh
