#pragma once

#include <functional>

namespace parabose {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  /// Integral of |f|, used to judge cancellation.
  double l1_norm = 0.0;
};

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b]; b may be
/// +infinity. Throws QuadratureFailure when the error estimate after
/// `max_depth` bisection levels still exceeds max(rel_tol*|I|, abs_tol).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol = 0.0, unsigned max_depth = 20);

}  // namespace parabose
