#include "parabose/integrate.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "parabose/errors.hpp"

namespace parabose {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;

// Bisection is driven here rather than by Rule's own recursion: the latter
// compares an error estimate taken on the reference interval [-1, 1] with a
// tolerance in the units of [a, b], so on short subintervals it cannot
// terminate and its reported error grows with depth.
struct Bisector {
  const std::function<double(double)>& f;
  double l1 = 0.0;
  double error = 0.0;

  double panel(double a, double b, double& err, double& l1_panel) const {
    const double v = Rule::integrate(f, a, b, 0, 0.0, &err, &l1_panel);
    err *= 0.5 * (b - a);
    return v;
  }

  double run(double a, double b, double v, double err, double l1_panel, double tol, unsigned depth) {
    if (depth == 0 || err <= tol) {
      error += err;
      l1 += l1_panel;
      return v;
    }
    const double mid = 0.5 * (a + b);
    double el, er, ll, lr;
    const double vl = panel(a, mid, el, ll);
    const double vr = panel(mid, b, er, lr);
    return run(a, mid, vl, el, ll, 0.5 * tol, depth - 1) + run(mid, b, vr, er, lr, 0.5 * tol, depth - 1);
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol, unsigned max_depth) {
  // [a, inf) is mapped onto [0, 1) by t = a + x / (1 - x).
  const std::function<double(double)> mapped = [&](double x) {
    const double s = 1.0 - x;
    return f(a + x / s) / (s * s);
  };
  const bool infinite = std::isinf(b);
  const std::function<double(double)>& g = infinite ? mapped : f;
  const double lo = infinite ? 0.0 : a;
  const double hi = infinite ? 1.0 : b;

  Bisector bis{g};
  double err, l1;
  const double first = bis.panel(lo, hi, err, l1);
  const double tol = std::max(rel_tol * std::fabs(first), abs_tol);

  QuadratureResult out;
  out.value = bis.run(lo, hi, first, err, l1, tol, max_depth);
  out.abs_error = bis.error;
  out.l1_norm = bis.l1;
  const double allowed = std::max(rel_tol * std::fabs(out.value), abs_tol);
  if (!std::isfinite(out.value) || out.abs_error > allowed) {
    std::ostringstream msg;
    msg << "adaptive Gauss-Kronrod on [" << a << ", " << b << "] reached depth " << max_depth
        << " with error estimate " << out.abs_error << " > " << allowed;
    throw NumericError(ErrorCode::QuadratureFailure, msg.str());
  }
  return out;
}

}  // namespace parabose
