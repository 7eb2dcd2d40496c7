#include <math.h>  // lgamma_r

#include <cmath>
#include <limits>
#include <string>

#include "parabose/errors.hpp"
#include "parabose/specfun.hpp"

namespace parabose::specfun {

namespace {

constexpr unsigned kLinearLimit = 150;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double pochhammer(double x, unsigned j) {
  double result = 1.0;
  for (unsigned i = 0; i < j; ++i) {
    result *= x + static_cast<double>(i);
    if (!std::isfinite(result)) {
      throw NumericError(ErrorCode::OverflowRequiresLogSpace,
                         "pochhammer(" + std::to_string(x) + ", " + std::to_string(j) + ")");
    }
  }
  return result;
}

SignedLog log_gamma(double x) {
  int sign = 1;
  const double value = ::lgamma_r(x, &sign);
  if (is_nonpositive_integer(x)) return {0, std::numeric_limits<double>::infinity()};
  return {sign, value};
}

double log_factorial(unsigned n) { return log_gamma(static_cast<double>(n) + 1.0).log_abs; }

SignedLog log_pochhammer(double x, unsigned j) {
  if (j == 0) return {1, 0.0};
  if (is_nonpositive_integer(x) && static_cast<double>(j) > -x) {
    return {0, -std::numeric_limits<double>::infinity()};
  }

  SignedLog acc{1, 0.0};
  unsigned i = 0;
  // Negative factors one at a time; they are finite in number.
  for (; i < j && x + static_cast<double>(i) < 0.0; ++i) {
    const double f = x + static_cast<double>(i);
    acc.sign = -acc.sign;
    acc.log_abs += std::log(-f);
  }
  if (i == j) return acc;

  const double start = x + static_cast<double>(i);
  const unsigned remaining = j - i;
  if (remaining <= kLinearLimit) {
    for (unsigned k = 0; k < remaining; ++k) acc.log_abs += std::log(start + static_cast<double>(k));
  } else {
    int s = 1;
    acc.log_abs += ::lgamma_r(start + static_cast<double>(remaining), &s) - ::lgamma_r(start, &s);
  }
  return acc;
}

}  // namespace parabose::specfun
