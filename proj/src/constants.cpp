#include "nilcoh/constants.hpp"

#include "nilcoh/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

namespace nilcoh {

using std::numbers::pi;

namespace {

std::mutex cache_mutex;
std::map<double, double> c_alpha_cache;
std::map<std::pair<double, int>, double> c_alpha_ell_cache;

double weight(double s, double p) { return std::pow(1.0 + 4.0 * pi * pi * s * s, -p); }

}  // namespace

double c_alpha(double alpha) {
  if (!(alpha > 0.5)) throw Error(ErrorKind::invalid_argument, "C_alpha needs alpha > 1/2");
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = c_alpha_cache.find(alpha); it != c_alpha_cache.end()) return it->second;
  }
  boost::math::quadrature::exp_sinh<double> integrator;
  const double half = integrator.integrate([alpha](double s) { return weight(s, alpha); }, 1e-13);
  const double value = std::sqrt(2.0 * half);
  std::lock_guard lock(cache_mutex);
  c_alpha_cache.emplace(alpha, value);
  return value;
}

double c_alpha_ell(double alpha, int ell) {
  if (!(alpha > 1.0)) throw Error(ErrorKind::invalid_argument, "C_{alpha,l} needs alpha > 1");
  if (ell < 0) throw Error(ErrorKind::invalid_argument, "C_{alpha,l} needs l >= 0");
  const auto key = std::make_pair(alpha, ell);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = c_alpha_ell_cache.find(key); it != c_alpha_ell_cache.end()) return it->second;
  }
  const double p = ell + alpha;
  boost::math::quadrature::exp_sinh<double> outer;
  const double integral = outer.integrate(
      [&](double u) {
        if (!std::isfinite(u) || weight(u, p) == 0.0) return 0.0;
        boost::math::quadrature::exp_sinh<double> inner;
        const double tail = inner.integrate([p](double v) { return weight(v, p); }, u,
                                            std::numeric_limits<double>::infinity(), 1e-13);
        return tail == 0.0 ? 0.0 : std::pow(2.0 * pi * u, 2 * ell) * tail;
      },
      1e-11);
  const double value = std::sqrt(2.0 * integral);
  std::lock_guard lock(cache_mutex);
  c_alpha_ell_cache.emplace(key, value);
  return value;
}

}  // namespace nilcoh
