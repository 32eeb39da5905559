#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hexatlas::detail {

inline double log_sinh(double x) {
  if (x > 18.0) return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

inline double log_cosh(double x) {
  x = std::abs(x);
  return x - std::numbers::ln2 + std::log1p(std::exp(-2.0 * x));
}

inline double log_add_exp(double p, double q) {
  const double hi = std::max(p, q);
  return hi + std::log1p(std::exp(-std::abs(p - q)));
}

// arccosh(1 + e^log_delta)
inline double acosh1p_exp(double log_delta) {
  if (log_delta > 1.0) {
    const double r = std::exp(-log_delta);
    return log_delta + std::log(1.0 + r + std::sqrt(1.0 + 2.0 * r));
  }
  // arccosh(1 + d) = sqrt(2d) (1 - d/12 + ...), kept in log space so tiny d
  // does not underflow before the square root.
  if (log_delta < -40.0) return std::exp(0.5 * (log_delta + std::numbers::ln2));
  const double d = std::exp(log_delta);
  return std::log1p(d + std::sqrt(d * (2.0 + d)));
}

// arcsinh(e^log_value)
inline double asinh_exp(double log_value) {
  if (log_value > 1.0) {
    const double r = std::exp(-2.0 * log_value);
    return log_value + std::log(1.0 + std::sqrt(1.0 + r));
  }
  return std::asinh(std::exp(log_value));
}

}  // namespace hexatlas::detail
