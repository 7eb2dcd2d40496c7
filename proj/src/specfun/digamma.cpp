#include <array>
#include <cmath>
#include <string>

#include "parabose/errors.hpp"
#include "parabose/specfun.hpp"

namespace parabose::specfun {

double digamma(double x) {
  if (!(x > 0.0)) {
    throw NumericError(ErrorCode::InvalidParameter, "digamma requires x > 0, got " + std::to_string(x));
  }
  // psi(x) = psi(x + n) - sum_{k<n} 1/(x + k), compensated.
  double shift = 0.0;
  double comp = 0.0;
  while (x < 12.0) {  // first omitted term, B_16 / (16 x^16), is then < 3e-18
    const double y = -1.0 / x - comp;
    const double t = shift + y;
    comp = (t - shift) - y;
    shift = t;
    x += 1.0;
  }
  // B_{2k} / (2k) for k = 1..7.
  static constexpr std::array<double, 7> kCoefficients = {
      1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
      1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
  };
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  for (auto it = kCoefficients.rbegin(); it != kCoefficients.rend(); ++it) series = (series + *it) * inv2;
  return std::log(x) - 0.5 / x - series + (shift - comp);
}

}  // namespace parabose::specfun
