#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <string_view>

namespace nilcoh {

/// Exact rational scalar. Expression templates are disabled so the type
/// behaves like an ordinary value type inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorQ = VectorX<Rational>;
using MatrixQ = MatrixX<Rational>;

/// Parses `p`, `p/q`, or a finite decimal such as `-0.125` exactly.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals, e.g. "0, 1/2, -3".
VectorQ parse_rational_vector(std::string_view text);

std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

/// Arithmetic policy shared by the templated algebra code: exact zero tests
/// for rationals, an absolute tolerance for doubles.
template <class Scalar>
struct NumericPolicy;

template <>
struct NumericPolicy<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return x == 0; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational from_int(long long v) { return Rational(v); }
  static double magnitude(const Rational& x) { return std::abs(to_double(x)); }
};

template <>
struct NumericPolicy<double> {
  static constexpr bool exact = false;
  static constexpr double tolerance = 1e-11;
  static bool is_zero(double x) { return std::abs(x) <= tolerance; }
  static double to_double(double x) { return x; }
  static double from_int(long long v) { return static_cast<double>(v); }
  static double magnitude(double x) { return std::abs(x); }
};

template <class Scalar>
bool is_zero(const Scalar& x) {
  return NumericPolicy<Scalar>::is_zero(x);
}

inline double to_double(const Rational& x) { return NumericPolicy<Rational>::to_double(x); }
inline double to_double(double x) { return x; }

template <class Derived>
Eigen::MatrixXd to_double(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(Scalar(m(i, j)));
  return out;
}

template <class Scalar>
Scalar scalar_cast(const Rational& x) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return x;
  } else {
    return static_cast<Scalar>(x.convert_to<double>());
  }
}

}  // namespace nilcoh
