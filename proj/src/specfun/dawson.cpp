#include <cmath>

#include "parabose/specfun.hpp"

namespace parabose::specfun {

namespace {

// For |x| <= 7 the Kummer-transformed Maclaurin series
//   F(x) = x e^{-x^2} 1F1(1/2; 3/2; x^2)
// has only positive terms; beyond, the asymptotic series
//   F(x) ~ 1/(2x) sum_k (2k-1)!! / (2x^2)^k
// reaches its smallest term near k = x^2, i.e. below e^{-49} relative.
constexpr double kSeriesLimit = 7.0;

double dawson_asymptotic(double x) {
  const double inv = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double next = term * (2.0 * k + 1.0) * inv;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum / (2.0 * x);
}

}  // namespace

double dawson(double x) {
  if (x == 0.0) return 0.0;
  const double ax = std::fabs(x);
  const double value = ax <= kSeriesLimit
                           ? ax * std::exp(-ax * ax) * hyp1f1(0.5, 1.5, ax * ax, Hyp1f1Route::direct).value
                           : dawson_asymptotic(ax);
  return x < 0.0 ? -value : value;
}

}  // namespace parabose::specfun
