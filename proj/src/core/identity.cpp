#include <algorithm>
#include <cmath>
#include <string>

#include "parabose/core.hpp"
#include "parabose/errors.hpp"
#include "parabose/integrate.hpp"

namespace parabose::core {

namespace {

constexpr double kRelTolerance = 1e-12;
constexpr double kAbsTolerance = 1e-13;

double log_closed_form(ParaBoseOrder p, int j, Parity parity) {
  const unsigned ju = static_cast<unsigned>(j);
  const double half_p = p.as_double() / 2.0;
  if (parity == Parity::even) {
    // [(2j)!]^2 / (2^{2j+1} j! (p/2)_j)
    return 2.0 * specfun::log_factorial(2 * ju) - (2.0 * j + 1.0) * std::log(2.0) - specfun::log_factorial(ju) -
           specfun::log_pochhammer(half_p, ju).log_abs;
  }
  // [(2j+1)!]^2 / (2^{2j+2} j! (p/2)_{j+1})
  return 2.0 * specfun::log_factorial(2 * ju + 1) - (2.0 * j + 2.0) * std::log(2.0) - specfun::log_factorial(ju) -
         specfun::log_pochhammer(half_p, ju + 1).log_abs;
}

}  // namespace

double identity_integral_closed_form(ParaBoseOrder p, int j, Parity parity) {
  if (j < 0) throw NumericError(ErrorCode::InvalidParameter, "j must be >= 0");
  return std::exp(log_closed_form(p, j, parity));
}

double identity_integral_ratio(ParaBoseOrder p, int j, Parity parity) {
  if (j < 0) throw NumericError(ErrorCode::InvalidParameter, "j must be >= 0");
  const double a = (1.0 - p.as_double()) / 2.0;
  const double b = parity == Parity::even ? j + 0.5 : j + 1.5;
  const double power = parity == Parity::even ? 4.0 * j + 1.0 : 4.0 * j + 3.0;
  const double log_norm = log_closed_form(p, j, parity);

  // r^power e^{-r^2} 1F1(a, b, r^2/2)^2 / closed form = r^power [e^{-r^2/2} 1F1]^2 / closed.
  // For even p the integrand decays only algebraically, so the mapped
  // half-line reaches arguments where 1F1 itself is far outside double range.
  auto integrand = [&](double r) {
    if (r <= 0.0) return 0.0;
    const specfun::SignedLog f = specfun::log_hyp1f1_scaled(a, b, r * r / 2.0);
    if (f.sign == 0) return 0.0;
    return std::exp(power * std::log(r) + 2.0 * f.log_abs - log_norm);
  };

  const double split = std::max(8.0, std::sqrt(2.0 * (4.0 * j + 3.0)) + 10.0);
  // The ratio is O(1), so the absolute floor is a relative accuracy on the
  // result; the tail is negligible for odd p and needs the floor to stop.
  const QuadratureResult head = integrate(integrand, 0.0, split, kRelTolerance, kAbsTolerance);
  const QuadratureResult tail = integrate(integrand, split, std::numeric_limits<double>::infinity(),
                                          kRelTolerance, kAbsTolerance);
  return head.value + tail.value;
}

double identity_resolution_residual(ParaBoseOrder p, int j, Parity parity) {
  return identity_integral_ratio(p, j, parity) - 1.0;
}

}  // namespace parabose::core
