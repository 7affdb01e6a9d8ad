#include "nilcoh/diophantine.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <boost/math/special_functions/factorials.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

namespace nilcoh {

namespace {

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

void normalize_sign(std::vector<long>& m) {
  for (long v : m) {
    if (v == 0) continue;
    if (v < 0)
      for (long& w : m) w = -w;
    return;
  }
}

// ⟨M, Ω⟩ in double-double; every product is exact.
struct FloatBackend {
  const Eigen::VectorXd& omega;
  using Value = DoubleDouble;

  Value dot(const std::vector<long>& m) const {
    DoubleDouble acc;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) acc = acc + DoubleDouble::product(static_cast<double>(m[i]), omega(static_cast<Eigen::Index>(i)));
    return acc;
  }
  static bool is_zero(const Value& v) { return v.is_zero(); }
  static double magnitude(const Value& v) { return std::abs(v.value()); }
  // floor(−Σ_{i≠s} M_i ω_i / ω_s), or nullopt when ω_s = 0.
  std::optional<long> pivot(const std::vector<long>& m, std::size_t s) const {
    const double ws = omega(static_cast<Eigen::Index>(s));
    if (ws == 0.0) return std::nullopt;
    std::vector<long> rest = m;
    rest[s] = 0;
    const double target = -dot(rest).value() / ws;
    if (!std::isfinite(target)) return std::nullopt;
    return static_cast<long>(std::floor(std::clamp(target, -9.0e18, 9.0e18)));
  }
};

struct ExactBackend {
  const VectorQ& omega;
  using Value = Rational;

  Value dot(const std::vector<long>& m) const {
    Rational acc = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) acc += Rational(m[i]) * omega(static_cast<Eigen::Index>(i));
    return acc;
  }
  static bool is_zero(const Value& v) { return v == 0; }
  static double magnitude(const Value& v) { return std::abs(v.convert_to<double>()); }
  std::optional<long> pivot(const std::vector<long>& m, std::size_t s) const {
    const Rational& ws = omega(static_cast<Eigen::Index>(s));
    if (ws == 0) return std::nullopt;
    std::vector<long> rest = m;
    rest[s] = 0;
    const Rational target = -dot(rest) / ws;
    Integer q = boost::multiprecision::numerator(target) / boost::multiprecision::denominator(target);
    if (target < 0 && Rational(q) != target) q -= 1;
    return q.convert_to<long>();
  }
};

template <class Backend>
bool smaller(const typename Backend::Value& a, const typename Backend::Value& b) {
  if constexpr (std::is_same_v<typename Backend::Value, Rational>) {
    return abs(a) < abs(b);
  } else {
    return Backend::magnitude(a) < Backend::magnitude(b);
  }
}

struct ShellMinimum {
  double minimum = 0.0;
  bool exact_zero = false;
  std::vector<long> witness;
};

// Exact minimum of |⟨M, Ω⟩| over the shell |M|_∞ = r. By the symmetry
// M ↦ −M the first coordinate of size r is fixed to +r; one further
// coordinate is solved for by rounding, the rest are enumerated.
template <class Backend>
ShellMinimum shell_minimum(const Backend& backend, int n, long r) {
  std::optional<typename Backend::Value> best;
  std::vector<long> best_m;
  std::vector<long> m(static_cast<std::size_t>(n), 0);
  auto consider = [&]() {
    auto v = backend.dot(m);
    if (!best || smaller<Backend>(v, *best)) {
      best = v;
      best_m = m;
    }
  };

  for (int i0 = 0; i0 < n; ++i0) {
    std::vector<long> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      if (i < i0) lo[k] = -r + 1, hi[k] = r - 1;
      else if (i == i0) lo[k] = hi[k] = r;
      else lo[k] = -r, hi[k] = r;
    }
    const int s = n == 1 ? -1 : (i0 != n - 1 ? n - 1 : n - 2);
    std::vector<int> free;
    for (int i = 0; i < n; ++i)
      if (i != i0 && i != s) free.push_back(i);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
    while (true) {
      if (s < 0) {
        consider();
      } else {
        const auto ks = static_cast<std::size_t>(s);
        const std::optional<long> p = backend.pivot(m, ks);
        if (!p) {
          m[ks] = std::clamp(0L, lo[ks], hi[ks]);
          consider();
        } else {
          for (long c : {*p, *p + 1}) {
            m[ks] = std::clamp(c, lo[ks], hi[ks]);
            consider();
          }
        }
      }
      // odometer over the enumerated coordinates
      std::size_t j = 0;
      for (; j < free.size(); ++j) {
        const auto k = static_cast<std::size_t>(free[j]);
        if (m[k] < hi[k]) {
          ++m[k];
          break;
        }
        m[k] = lo[k];
      }
      if (j == free.size()) break;
    }
  }
  ShellMinimum out;
  out.minimum = Backend::magnitude(*best);
  out.exact_zero = Backend::is_zero(*best);
  out.witness = best_m;
  normalize_sign(out.witness);
  return out;
}

template <class F>
void for_each_shell(const FrequencyInput& omega, long m_max, F&& visit) {
  if (m_max < 1) throw Error(ErrorKind::invalid_argument, "M_max must be at least 1");
  const int n = static_cast<int>(omega.values.size());
  if (n == 0) throw Error(ErrorKind::invalid_argument, "empty frequency vector");
  for (long r = 1; r <= m_max; ++r) {
    ShellMinimum sm;
    if (omega.exact) sm = shell_minimum(ExactBackend{*omega.exact}, n, r);
    else sm = shell_minimum(FloatBackend{omega.values}, n, r);
    if (!visit(r, sm)) return;
  }
}

std::string format_witness(const std::vector<long>& m) { return fmt::format("({})", fmt::join(m, ", ")); }

double parse_real_token(std::string_view token, std::optional<Rational>& exact) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  token = trim(token);
  auto argument = [&](std::string_view name) -> std::optional<std::string_view> {
    if (token.size() > name.size() + 2 && token.substr(0, name.size()) == name && token[name.size()] == '(' &&
        token.back() == ')')
      return trim(token.substr(name.size() + 1, token.size() - name.size() - 2));
    return std::nullopt;
  };
  exact.reset();
  if (token == "phi") return std::numbers::phi;
  if (token == "pi") return std::numbers::pi;
  if (token == "e") return std::numbers::e;
  if (auto arg = argument("sqrt")) {
    const Rational r = parse_rational(*arg);
    if (r < 0) throw Error(ErrorKind::parse, "sqrt of a negative number");
    return std::sqrt(r.convert_to<double>());
  }
  if (auto arg = argument("liouville")) {
    const Rational j = parse_rational(*arg);
    if (!is_integer(j) || j < 1 || j > 4) throw Error(ErrorKind::parse, "liouville(J) needs 1 <= J <= 4");
    double sum = 0.0;
    for (unsigned k = 1; k <= j.convert_to<unsigned>(); ++k) sum += std::pow(10.0, -boost::math::factorial<double>(k));
    return sum;
  }
  exact = parse_rational(token);
  return exact->convert_to<double>();
}

}  // namespace

DoubleDouble DoubleDouble::product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DoubleDouble DoubleDouble::operator+(const DoubleDouble& other) const {
  DoubleDouble s = two_sum(hi, other.hi);
  const DoubleDouble t = two_sum(lo, other.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

Eigen::VectorXd frequency_vector(const AlgebraD& alg, const Eigen::VectorXd& x) {
  if (x.size() != alg.dim()) throw Error(ErrorKind::dimension_mismatch, "X must have the algebra's dimension");
  return x.head(alg.generator_count());
}

VectorQ frequency_vector(const AlgebraQ& alg, const VectorQ& x) {
  if (x.size() != alg.dim()) throw Error(ErrorKind::dimension_mismatch, "X must have the algebra's dimension");
  return x.head(alg.generator_count());
}

FrequencyInput FrequencyInput::from_double(Eigen::VectorXd values) { return {std::move(values), std::nullopt}; }

FrequencyInput FrequencyInput::from_rational(const VectorQ& values) { return {to_double(values), values}; }

FrequencyInput FrequencyInput::parse(std::string_view text) {
  std::vector<double> values;
  std::vector<Rational> exact;
  bool all_exact = true;
  std::size_t start = 0;
  while (start <= text.size()) {
    // commas inside parentheses belong to the entry
    std::size_t end = start;
    int depth = 0;
    while (end < text.size() && (text[end] != ',' || depth > 0)) {
      if (text[end] == '(') ++depth;
      if (text[end] == ')') --depth;
      ++end;
    }
    std::optional<Rational> q;
    values.push_back(parse_real_token(text.substr(start, end - start), q));
    if (q) exact.push_back(*q);
    else all_exact = false;
    start = end + 1;
  }
  FrequencyInput out;
  out.values = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  if (all_exact) {
    VectorQ q(static_cast<Eigen::Index>(exact.size()));
    for (std::size_t i = 0; i < exact.size(); ++i) q(static_cast<Eigen::Index>(i)) = exact[i];
    out.exact = q;
  }
  return out;
}

ContinuedFractionCheck continued_fraction(double x, long max_denominator) {
  ContinuedFractionCheck out;
  long double rest = x;
  long p_prev = 0, q_prev = 1, p = 1, q = 0;
  for (int k = 0; k < 64; ++k) {
    const long double a = std::floor(rest);
    const long ai = static_cast<long>(a);
    const long p_next = ai * p + p_prev, q_next = ai * q + q_prev;
    if (q_next > max_denominator) break;
    out.partial_quotients.push_back(ai);
    out.convergents.emplace_back(p_next, q_next);
    p_prev = p, q_prev = q, p = p_next, q = q_next;
    const long double frac = rest - a;
    if (frac <= 0) break;
    rest = 1.0L / frac;
  }
  return out;
}

DiophantineReport certify(const FrequencyInput& omega, double tau, long m_max) {
  if (tau < 0) throw Error(ErrorKind::invalid_argument, "tau must be nonnegative");
  DiophantineReport report;
  report.omega = omega.values;
  report.tau = tau;
  report.m_max = m_max;
  const int n = static_cast<int>(omega.values.size());
  const double exponent = n - 1 + tau;

  double running_scaled = INFINITY, running_min = INFINITY;
  std::vector<std::vector<long>> records;
  for_each_shell(omega, m_max, [&](long r, const ShellMinimum& sm) {
    if (sm.exact_zero)
      throw Error(ErrorKind::rational_relation,
                  fmt::format("<M, Omega> = 0 for M = {}", format_witness(sm.witness)));
    ShellRecord rec{r, sm.minimum, sm.minimum * std::pow(static_cast<double>(r), exponent), sm.witness};
    if (!report.collapse_shell && r > 1 && rec.scaled < running_scaled / 5.0) report.collapse_shell = r;
    if (rec.scaled < running_scaled) {
      running_scaled = rec.scaled;
      report.k_best = rec.scaled;
      report.witness = rec.witness;
    }
    if (rec.minimum < running_min) {
      running_min = rec.minimum;
      records.push_back(rec.witness);
    }
    report.shells.push_back(std::move(rec));
    return true;
  });

  if (n == 2 && omega.values(0) != 0.0) {
    ContinuedFractionCheck cf = continued_fraction(omega.values(1) / omega.values(0), m_max);
    cf.record_witnesses = records;
    cf.agrees = true;
    for (const auto& w : records) {
      if (w[1] == 0) continue;
      // w0 ω0 + w1 ω1 ≈ 0, so ω1/ω0 ≈ −w0/w1
      const long p = w[1] > 0 ? -w[0] : w[0], q = std::abs(w[1]);
      const bool found = std::any_of(cf.convergents.begin(), cf.convergents.end(),
                                     [&](const auto& c) { return c.first == p && c.second == q; });
      cf.agrees = cf.agrees && found;
    }
    report.continued_fraction = std::move(cf);
  }
  return report;
}

RelationResult is_irrational_in_range(const FrequencyInput& omega, long m_max) {
  RelationResult out;
  for_each_shell(omega, m_max, [&](long, const ShellMinimum& sm) {
    if (!sm.exact_zero) return true;
    out.irrational = false;
    out.witness = sm.witness;
    return false;
  });
  return out;
}

}  // namespace nilcoh
