// Large-|alpha| forms. Where a printed line was internally inconsistent the
// form here is rederived from the exact expressions (see compound_forms.cpp
// for the printed variants).

#include <cmath>

#include "forms.hpp"
#include "parabose/specfun.hpp"

namespace parabose::moments::detail {

namespace {

double psi_half() { return specfun::digamma(0.5); }
double psi_three_halves() { return specfun::digamma(1.5); }

// (p - 1) / (2 (p - 2) r^2): large-|alpha| limit of xi for p != 2.
double xi_generic(ParaBoseOrder p, double r) {
  const double pd = p.as_double();
  return (pd - 1.0) / (2.0 * (pd - 2.0) * r * r);
}

// Large-|alpha| limit of f - h^2 for p = 2, using f - 1 ~ (L - psi(1/2))/(4r^2)
// and h - 1 ~ 1/(4r^2).
double xi_p2(double r) {
  const double u = 1.0 / (4.0 * r * r);
  return u * (log_two_r2(r) - psi_half()) - u * (2.0 + u);
}

}  // namespace

double log_two_r2(double r) { return std::log(2.0 * r * r); }

double mean_asymptotic(ParaBoseOrder p, double r) {
  const double r2 = r * r;
  if (p.value() == 2) return r2 + 0.25 * (log_two_r2(r) - psi_half());
  const double pd = p.as_double();
  return r2 + (pd - 1.0) / (2.0 * (pd - 2.0));
}

double second_moment_asymptotic(ParaBoseOrder p, double r) {
  const double r2 = r * r;
  const double L = log_two_r2(r);
  const double pd = p.as_double();
  switch (p.value()) {
    case 2: return r2 * r2 + r2 * (L + 1.5 - psi_three_halves()) - (L - psi_half()) / 8.0 + 0.5;
    // <n> = m + 3/(16 r^2) + ...; the correction contributes 3/8 to <n>^2.
    case 4: {
      const double m = mean_asymptotic(p, r);
      return variance_asymptotic(p, r) + m * m + 0.375;
    }
    default:
      return pd * r2 + r2 * r2 + 3.0 * (pd - 1.0) * (pd - 1.0 - 2.0 * r2 * (pd - 4.0) * (pd - 4.0)) /
                                     (6.0 * (pd - 4.0) * (pd - 2.0));
  }
}

double variance_asymptotic(ParaBoseOrder p, double r) {
  const double r2 = r * r;
  const double pd = p.as_double();
  switch (p.value()) {
    // <n> = m - 1/(16 r^2) + ...; the correction contributes -1/8 to <n>^2.
    case 2: {
      const double m = mean_asymptotic(p, r);
      return second_moment_asymptotic(p, r) - m * m + 0.125;
    }
    case 4: return 2.5 * r2 + 9.0 / 8.0 * (log_two_r2(r) - psi_half()) - 45.0 / 16.0;
    // <n^2> - <n>^2 of the generic lines, with the r^4 terms cancelled by hand.
    default:
      return r2 * (2.0 * pd - 3.0) / (pd - 2.0) +
             pd * (pd - 1.0) * (pd - 1.0) / (4.0 * (pd - 4.0) * (pd - 2.0) * (pd - 2.0));
  }
}

double mandel_q_asymptotic(ParaBoseOrder p, double r) {
  const double r2 = r * r;
  const double L = log_two_r2(r);
  const double pd = p.as_double();
  switch (p.value()) {
    case 2:
      return (4.0 * r2 * r2 + 4.0 * r2 * (L + 3.0 - psi_three_halves()) + 2.0) / (4.0 * r2 + L - psi_half()) - r2 -
             0.25 * (L - psi_half()) - 2.5;
    case 4: return 6.0 / (4.0 * r2 + 3.0) * (r2 + 0.75 * (L - 19.0 / 6.0 - psi_half()));
    default:
      return (pd - 1.0) * (4.0 * r2 * (pd - 4.0) * (pd - 2.0) - pd * pd + 11.0 * pd - 16.0) /
             (2.0 * (pd - 4.0) * (pd - 2.0) * (2.0 * r2 * (pd - 2.0) + pd - 1.0));
  }
}

std::pair<double, double> quadrature_means_asymptotic(Complex alpha) {
  const double s = std::sqrt(2.0);
  return {s * alpha.real(), s * alpha.imag()};
}

std::pair<double, double> quadrature_second_moments_asymptotic(ParaBoseOrder p, Complex alpha) {
  const double r = std::abs(alpha);
  const double sx = 4.0 * alpha.real() * alpha.real();
  const double sy = 4.0 * alpha.imag() * alpha.imag();
  if (p.value() == 2) {
    const double braces = 1.0 + (log_two_r2(r) - psi_half()) / (4.0 * r * r);
    return {1.0 + 0.5 * sx * braces, 1.0 + 0.5 * sy * braces};
  }
  const double pd = p.as_double();
  const double bracket = 0.5 + (pd - 1.0) / (4.0 * (pd - 2.0) * r * r);
  return {pd / 2.0 + sx * bracket, pd / 2.0 + sy * bracket};
}

std::pair<double, double> quadrature_variances_asymptotic(ParaBoseOrder p, Complex alpha) {
  const double r = std::abs(alpha);
  const bool p2 = p.value() == 2;
  const double xi = p2 ? xi_p2(r) : xi_generic(p, r);
  const double base = p2 ? 1.0 : p.as_double() / 2.0;
  return {base + 2.0 * alpha.real() * alpha.real() * xi, base + 2.0 * alpha.imag() * alpha.imag() * xi};
}

double uncertainty_product_asymptotic(ParaBoseOrder p, Complex alpha) {
  const double r = std::abs(alpha);
  const double pd = p.as_double();
  const double xi = p.value() == 2 ? xi_p2(r) : xi_generic(p, r);
  const double im2 = (alpha * alpha).imag();
  return std::sqrt(pd * pd / 4.0 + pd * r * r * xi + im2 * im2 * xi * xi);
}

}  // namespace parabose::moments::detail
