#include <cmath>
#include <limits>

#include "parabose/errors.hpp"
#include "parabose/moments.hpp"
#include "parabose/specfun.hpp"

namespace parabose::moments {

namespace {

// e^{-2r^2} 1F1(a, b, 2r^2)
double scaled(double a, double b, double r) { return specfun::hyp1f1_scaled(a, b, 2.0 * r * r).value; }

}  // namespace

double aux_f(double r) { return 1.0 + specfun::hyp2f2(1.0, 1.0, 1.5, 2.0, -2.0 * r * r).value; }

double aux_g(ParaBoseOrder p, double r) { return 1.0 - scaled((3.0 - p.as_double()) / 2.0, 0.5, r); }

double aux_h(ParaBoseOrder p, double r) {
  const double pd = p.as_double();
  if (p.is_boson()) return 1.0;
  return 1.0 + (pd - 1.0) * scaled((3.0 - pd) / 2.0, 1.5, r);
}

double aux_chi1(ParaBoseOrder p, double r) {
  const double pd = p.as_double();
  const double r2 = r * r;
  return 3.0 * (pd - 1.0 + 2.0 * r2 * (5.0 * pd - 14.0)) * scaled((3.0 - pd) / 2.0, 1.5, r);
}

double aux_chi2(ParaBoseOrder p, double r) {
  const double pd = p.as_double();
  const double r2 = r * r;
  if (pd == 3.0 || r == 0.0) return 0.0;
  return 4.0 * r2 * (pd - 3.0) * (1.0 - pd + 2.0 * r2 * (pd + 2.0)) * scaled((5.0 - pd) / 2.0, 2.5, r);
}

double aux_xi(ParaBoseOrder p, double r) {
  if (r == 0.0) throw NumericError(ErrorCode::InvalidParameter, "xi is undefined at |alpha| = 0");
  const double h = aux_h(p, r);
  if (p.value() == 2) return aux_f(r) - h * h;
  const double pd = p.as_double();
  return (pd - 1.0) * aux_g(p, r) / (2.0 * r * r * (pd - 2.0)) - h * h + 1.0;
}

AuxiliaryFunctions auxiliary(ParaBoseOrder p, double r) {
  AuxiliaryFunctions a;
  a.f = aux_f(r);
  a.g = aux_g(p, r);
  a.h = aux_h(p, r);
  a.xi = r == 0.0 ? std::numeric_limits<double>::quiet_NaN() : aux_xi(p, r);
  a.chi1 = aux_chi1(p, r);
  a.chi2 = aux_chi2(p, r);
  return a;
}

double parity_expectation(ParaBoseOrder p, double r) { return scaled((1.0 - p.as_double()) / 2.0, 0.5, r); }

}  // namespace parabose::moments
