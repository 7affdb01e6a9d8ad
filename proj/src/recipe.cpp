#include "nilcoh/recipe.hpp"

#include "nilcoh/rational.hpp"

#include <fmt/format.h>

#include <cctype>
#include <cmath>
#include <numbers>

namespace nilcoh {

using std::numbers::pi;

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Recipe parse() {
    std::vector<RecipeTerm> terms;
    skip();
    double sign = 1.0;
    if (consume('-')) sign = -1.0;
    else consume('+');
    terms.push_back(term(sign));
    while (true) {
      skip();
      if (at_end()) break;
      if (consume('+')) sign = 1.0;
      else if (consume('-')) sign = -1.0;
      else fail("expected '+' or '-'");
      terms.push_back(term(sign));
    }
    return Recipe(std::move(terms));
  }

 private:
  RecipeTerm term(double sign) {
    RecipeTerm out;
    out.coefficient = sign;
    bool have_envelope = false;
    while (true) {
      skip();
      factor(out, have_envelope);
      skip();
      if (!consume('*')) break;
    }
    return out;
  }

  void factor(RecipeTerm& term, bool& have_envelope) {
    skip();
    if (at_end()) fail("unexpected end of recipe");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(') {
      term.coefficient *= number();
      return;
    }
    const std::string word = identifier();
    if (word == "t") {
      int power = 1;
      skip();
      if (consume('^')) power = static_cast<int>(number());
      if (power < 0) fail("negative power of t");
      term.power += power;
      return;
    }
    auto envelope = [&]() {
      if (have_envelope) fail("at most one envelope per term");
      have_envelope = true;
    };
    if (word == "gaussian" || word == "dgaussian") {
      envelope();
      double a = 1.0;
      skip();
      if (consume('(')) {
        a = number();
        expect(')');
      }
      if (a <= 0) fail("gaussian rate must be positive");
      term.envelope = RecipeTerm::Envelope::gaussian;
      term.rate = a;
      if (word == "dgaussian") {
        term.coefficient *= -2.0 * pi * a;
        term.power += 1;
      }
      return;
    }
    if (word == "hermite") {
      envelope();
      expect('(');
      const double n = number();
      expect(')');
      if (n < 0 || n != std::floor(n)) fail("hermite index must be a nonnegative integer");
      term.envelope = RecipeTerm::Envelope::hermite;
      term.index = static_cast<int>(n);
      return;
    }
    fail("unknown factor '" + word + "'");
  }

  double number() {
    skip();
    if (consume('(')) {
      double sign = 1.0;
      skip();
      if (consume('-')) sign = -1.0;
      const double v = sign * number();
      expect(')');
      return v;
    }
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                         text_[pos_] == '/'))
      ++pos_;
    if (start == pos_) fail("expected a number");
    return parse_rational(text_.substr(start, pos_ - start)).convert_to<double>();
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a factor");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool consume(char c) {
    skip();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse, "recipe '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double hermite_value(int n, double omega, double t) {
  if (n < 0) return 0.0;
  Eigen::VectorXd point(1);
  point(0) = t;
  return hermite_functions(omega, n + 1, point)(0, n);
}

}  // namespace

Recipe Recipe::parse(std::string_view text) { return Parser(text).parse(); }

bool Recipe::uses_hermite() const {
  for (const auto& term : terms_)
    if (term.envelope == RecipeTerm::Envelope::hermite) return true;
  return false;
}

std::complex<double> Recipe::operator()(double t, double omega) const {
  double total = 0.0;
  for (const auto& term : terms_) {
    double v = term.coefficient * std::pow(t, term.power);
    switch (term.envelope) {
      case RecipeTerm::Envelope::none: break;
      case RecipeTerm::Envelope::gaussian: v *= std::exp(-pi * term.rate * t * t); break;
      case RecipeTerm::Envelope::hermite:
        if (omega <= 0) throw Error(ErrorKind::invalid_argument, "hermite recipes need an oscillator frequency");
        v *= hermite_value(term.index, omega, t);
        break;
    }
    total += v;
  }
  return total;
}

Recipe Recipe::derivative(double omega) const {
  std::vector<RecipeTerm> out;
  for (const auto& term : terms_) {
    if (term.power > 0) {
      RecipeTerm d = term;
      d.coefficient *= term.power;
      d.power -= 1;
      out.push_back(d);
    }
    if (term.envelope == RecipeTerm::Envelope::gaussian) {
      RecipeTerm d = term;
      d.coefficient *= -2.0 * pi * term.rate;
      d.power += 1;
      out.push_back(d);
    } else if (term.envelope == RecipeTerm::Envelope::hermite) {
      if (omega <= 0) throw Error(ErrorKind::invalid_argument, "hermite recipes need an oscillator frequency");
      const double s = std::sqrt(omega / 2.0);
      if (term.index > 0) {
        RecipeTerm d = term;
        d.coefficient *= s * std::sqrt(static_cast<double>(term.index));
        d.index -= 1;
        out.push_back(d);
      }
      RecipeTerm d = term;
      d.coefficient *= -s * std::sqrt(static_cast<double>(term.index + 1));
      d.index += 1;
      out.push_back(d);
    }
  }
  return Recipe(std::move(out));
}

std::string Recipe::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& term = terms_[i];
    const double c = term.coefficient;
    if (i == 0) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    out += fmt::format("{}", std::abs(c));
    if (term.power == 1) out += "*t";
    if (term.power > 1) out += fmt::format("*t^{}", term.power);
    if (term.envelope == RecipeTerm::Envelope::gaussian) out += fmt::format("*gaussian({})", term.rate);
    if (term.envelope == RecipeTerm::Envelope::hermite) out += fmt::format("*hermite({})", term.index);
  }
  return out;
}

RepFunction sample_recipe(const Recipe& recipe, const RepContext& ctx, const Grid& grid) {
  const double omega = recipe.uses_hermite() ? ctx.oscillator_frequency() : 0.0;
  const Eigen::VectorXd t = grid.nodes();
  Eigen::MatrixXcd values = Eigen::MatrixXcd::Zero(grid.size, 1);
  for (const auto& term : recipe.terms()) {
    Eigen::VectorXd column(grid.size);
    if (term.envelope == RecipeTerm::Envelope::hermite) {
      column = hermite_functions(omega, term.index + 1, t).col(term.index);
    } else {
      for (int j = 0; j < grid.size; ++j)
        column(j) = term.envelope == RecipeTerm::Envelope::gaussian ? std::exp(-pi * term.rate * t(j) * t(j)) : 1.0;
    }
    for (int j = 0; j < grid.size; ++j) column(j) *= term.coefficient * std::pow(t(j), term.power);
    values.col(0) += column.cast<std::complex<double>>();
  }
  return RepFunction::on_grid(ctx, grid, std::move(values), DecayKind::schwartz);
}

}  // namespace nilcoh
