#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace testing {

// |a - b| <= max(rel * |b|, abs_floor)
inline bool close(double a, double b, double rel, double abs_floor = 0.0) {
  return std::fabs(a - b) <= std::max(rel * std::fabs(b), abs_floor);
}

inline bool close(std::complex<double> a, std::complex<double> b, double rel, double abs_floor = 0.0) {
  return std::abs(a - b) <= std::max(rel * std::abs(b), abs_floor);
}

inline double rel_err(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

// Five-point central difference.
template <class F>
double derivative(F f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

}  // namespace testing
