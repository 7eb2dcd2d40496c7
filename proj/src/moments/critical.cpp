#include <cmath>
#include <string>

#include "parabose/errors.hpp"
#include "parabose/moments.hpp"

namespace parabose::moments {

double critical_alpha(ParaBoseOrder p, Method method, double tolerance) {
  if (p.is_boson()) {
    throw NumericError(ErrorCode::NoRoot, "Q vanishes identically for p = 1");
  }
  constexpr double kLow = 0.1;
  constexpr double kHigh = 10.0;
  constexpr int kSteps = 99;  // step 0.1
  auto q = [&](double r) { return mandel_q(p, Complex(r, 0.0), method); };

  double lo = kLow;
  double q_lo = q(lo);
  for (int i = 1; i <= kSteps; ++i) {
    const double hi = kLow + i * (kHigh - kLow) / kSteps;
    const double q_hi = q(hi);
    if (q_lo == 0.0) return lo;
    if ((q_lo < 0.0) != (q_hi < 0.0)) {
      double a = lo;
      double b = hi;
      double qa = q_lo;
      while (b - a > tolerance) {
        const double mid = 0.5 * (a + b);
        const double qm = q(mid);
        if (qm == 0.0) return mid;
        if ((qa < 0.0) == (qm < 0.0)) {
          a = mid;
          qa = qm;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    lo = hi;
    q_lo = q_hi;
  }
  throw NumericError(ErrorCode::NoRoot,
                     "Q(p = " + std::to_string(p.value()) + ", |alpha|) keeps its sign on [0.1, 10]");
}

}  // namespace parabose::moments
