// Tabulated compound forms, transcribed term by term. Nothing in the
// library routes through these; the diagnostic test measures how far each
// branch sits from the definitional assembly.

#include <cmath>
#include <numbers>

#include "forms.hpp"
#include "parabose/errors.hpp"
#include "parabose/moments.hpp"
#include "parabose/specfun.hpp"

namespace parabose::moments::printed {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrtPi = std::sqrt(std::numbers::pi);

double dawson_term(double r) { return specfun::dawson(kSqrt2 * r); }

double f22_b(double r) { return specfun::hyp2f2(1.0, 1.0, 2.5, 3.0, -2.0 * r * r).value; }

void require_nonzero(double r) {
  if (r == 0.0) throw NumericError(ErrorCode::DegenerateState, "printed compound forms need |alpha| > 0");
}

// The p = 2 bracket with h - 1 ~ 1/(2 sqrt(pi) r^2), as printed.
double bracket_p2(double r) {
  const double r2 = r * r;
  const double u = 1.0 / (2.0 * kSqrtPi * r2);
  return (detail::log_two_r2(r) - specfun::digamma(0.5)) / (4.0 * r2) - u * (2.0 + u);
}

}  // namespace

double variance_n(ParaBoseOrder p, double r) {
  const double r2 = r * r;
  const double r4 = r2 * r2;
  const double pd = p.as_double();
  switch (p.value()) {
    case 2: {
      const double f = aux_f(r);
      return 4.0 * r2 + r4 + r / kSqrt2 * dawson_term(r) - 1.5 * r2 * f - r4 * f * f + 2.0 / 3.0 * f22_b(r);
    }
    case 4: {
      const double f = aux_f(r);
      return r2 - 3.0 * kSqrt2 * (r + r * r2) * dawson_term(r) + 4.5 * r2 * f - 4.5 * r2 * f * f;
    }
    default: {
      const double g = aux_g(p, r);
      const double chi = aux_chi1(p, r) + aux_chi2(p, r);
      const double inner = 3.0 * (pd - 4.0) * (pd - 1.0) * g * g + 2.0 * (pd - 2.0) * (chi - 3.0 * pd + 3.0);
      return r2 * (3.0 * pd - 4.0) / (pd - 2.0) -
             (pd - 1.0) / (12.0 * (pd - 4.0) * (pd - 2.0) * (pd - 2.0)) *
                 (inner + 12.0 * r2 * (pd - 4.0) * (pd - 2.0) * g);
    }
  }
}

double mandel_q(ParaBoseOrder p, double r) {
  require_nonzero(r);
  const double r2 = r * r;
  const double pd = p.as_double();
  switch (p.value()) {
    case 2: {
      const double f = aux_f(r);
      return 1.0 / (6.0 * r * f) *
                 (4.0 * r * r2 * f22_b(r) + 6.0 * r * r2 + 24.0 * r + 3.0 * kSqrt2 * dawson_term(r)) -
             2.5 - r2 * f;
    }
    case 4: {
      const double f = aux_f(r);
      const double d = dawson_term(r);
      return 3.0 / (2.0 * r + 3.0 * kSqrt2 * d) * (3.0 * r * (f - d * d) - kSqrt2 * (4.0 * r2 + 3.0) * d);
    }
    default: {
      const double g = aux_g(p, r);
      const double chi = aux_chi1(p, r) + aux_chi2(p, r);
      const double num = -6.0 * (2.0 * r2 + 1.0) * (pd - 4.0) * (pd - 2.0) * g - 3.0 * (pd - 4.0) * (pd - 1.0) * g * g -
                         2.0 * (pd - 2.0) * (chi - 12.0 * r2 * (pd - 4.0) - 3.0 * pd + 3.0);
      return (pd - 1.0) / (6.0 * (pd - 4.0) * (pd - 2.0) * (2.0 * r2 * (pd - 2.0) + (pd - 1.0) * g)) * num;
    }
  }
}

double variance_n_asymptotic_p2(double r) {
  const double r2 = r * r;
  const double L = detail::log_two_r2(r);
  const double ph = specfun::digamma(0.5);
  const double p3 = specfun::digamma(1.5);
  return r2 * (0.5 * L + 1.5 + 0.5 * ph - p3) - ph * ph / 16.0 - 0.125 * (3.0 + ph + L / 8.0) * L + 0.25 +
         3.0 / 8.0 * ph;
}

double second_moment_n_asymptotic_p2(double r) {
  const double r2 = r * r;
  const double L = detail::log_two_r2(r);
  const double ph = specfun::digamma(0.5);
  const double p3 = specfun::digamma(1.5);
  return r2 * r2 + r2 * (L + 1.5 - p3) + L / 8.0 - 0.25 + 3.0 * ph / 8.0 - p3 / 2.0;
}

double variance_n_asymptotic_p4(double r) {
  return 2.5 * r * r + 9.0 / 8.0 * (detail::log_two_r2(r) - specfun::digamma(0.5)) - 33.0 / 16.0;
}

double variance_n_asymptotic_generic(ParaBoseOrder p, double r) {
  const double pd = p.as_double();
  return r * r * (2.0 * pd - 3.0) / (pd - 2.0) + pd * (pd - 1.0) / (4.0 * (pd - 4.0) * (pd - 2.0));
}

double mandel_q_asymptotic_p4(double r) {
  const double r2 = r * r;
  return 6.0 / (4.0 * r2 + 3.0) * (r2 + 0.75 * (detail::log_two_r2(r) - 2.5 - specfun::digamma(0.5)));
}

double second_moment_n_asymptotic_p4(double r) {
  return 2.5 * r * r + 9.0 / 8.0 * (detail::log_two_r2(r) - specfun::digamma(0.5)) - 33.0 / 16.0;
}

double variance_x_asymptotic_p2(Complex alpha) {
  const double r = std::abs(alpha);
  require_nonzero(r);
  return 1.0 + 2.0 * alpha.real() * alpha.real() * bracket_p2(r);
}

double uncertainty_product_sq_asymptotic(ParaBoseOrder p, Complex alpha) {
  const double r = std::abs(alpha);
  require_nonzero(r);
  const double pd = p.as_double();
  const double re2 = 2.0 * (alpha * alpha).real();  // alpha^2 + alpha*^2
  if (p.value() == 2) {
    const double L = detail::log_two_r2(r);
    const double b = bracket_p2(r);
    return 1.0 + 0.5 * (L - specfun::digamma(0.5)) - (2.0 + 1.0 / (2.0 * kSqrtPi * r * r)) / kSqrtPi +
           0.25 * re2 * re2 * b * b;
  }
  const double x = (pd - 1.0) / (2.0 * (pd - 2.0) * r * r);
  return pd * pd / 4.0 + pd * (pd - 1.0) / (2.0 * (pd - 2.0)) + 0.25 * re2 * re2 * x * x;
}

}  // namespace parabose::moments::printed
