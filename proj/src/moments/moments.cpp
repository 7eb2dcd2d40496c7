#include <cmath>
#include <complex>
#include <string>
#include <tuple>

#include "forms.hpp"
#include "parabose/core.hpp"
#include "parabose/errors.hpp"
#include "parabose/moments.hpp"
#include "parabose/specfun.hpp"

namespace parabose::moments {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void require_method(Method m, Complex alpha) {
  if (m == Method::oracle) {
    throw NumericError(ErrorCode::InvalidParameter, "oracle moments come from oracle::oracle_report");
  }
  if (m == Method::asymptotic && std::abs(alpha) < kAsymptoticMinModulus) {
    throw NumericError(ErrorCode::InvalidParameter,
                       "asymptotic forms need |alpha| >= 3, got " + std::to_string(std::abs(alpha)));
  }
}

std::pair<double, double> second_moments_from(const DirectSums& s) {
  const double sym = 0.5 * (s.a_dag_a + s.a_a_dag);
  return {s.a2.real() + sym, -s.a2.real() + sym};
}

double product_analytic(ParaBoseOrder p, Complex alpha) {
  const double r = std::abs(alpha);
  const double pd = p.as_double();
  if (r == 0.0) return pd / 2.0;
  const double xi = aux_xi(p, r);
  const double im2 = (alpha * alpha).imag();
  // (p/2 + 2 Re^2 xi)(p/2 + 2 Im^2 xi) regrouped as in the closed form.
  const double sq = pd * pd / 4.0 + pd * r * r * xi + im2 * im2 * xi * xi;
  return std::sqrt(sq);
}

}  // namespace

namespace detail {

double mean_analytic(ParaBoseOrder p, double r) {
  const double r2 = r * r;
  if (p.value() == 2) return r2 * aux_f(r);
  const double pd = p.as_double();
  return r2 + (pd - 1.0) / (2.0 * (pd - 2.0)) * aux_g(p, r);
}

double second_moment_analytic(ParaBoseOrder p, double r) {
  const double r2 = r * r;
  const double r4 = r2 * r2;
  switch (p.value()) {
    case 2:
      return 4.0 * r2 + r4 + r / kSqrt2 * specfun::dawson(kSqrt2 * r) - 1.5 * r2 * aux_f(r) +
             2.0 / 3.0 * r4 * specfun::hyp2f2(1.0, 1.0, 2.5, 3.0, -2.0 * r2).value;
    case 4:
      return r2 + r4 - 3.0 * kSqrt2 * (r + r * r2) * specfun::dawson(kSqrt2 * r) + 4.5 * r2 * aux_f(r);
    default: {
      const double pd = p.as_double();
      const double braces = 3.0 * (pd - 1.0 - 2.0 * r2 * (pd - 4.0) * (pd - 4.0)) - aux_chi1(p, r) - aux_chi2(p, r);
      return pd * r2 + r4 + (pd - 1.0) / (6.0 * (pd - 4.0) * (pd - 2.0)) * braces;
    }
  }
}

}  // namespace detail

DirectSums direct_sums(ParaBoseOrder p, Complex alpha, std::optional<int> truncation) {
  const core::FockAmplitudes amps = core::fock_amplitudes(p, alpha, truncation);
  const auto& c = amps.amplitudes;
  DirectSums s;
  s.truncation = amps.truncation;
  s.tail_bound = amps.tail_bound;
  for (int n = 0; n < static_cast<int>(c.size()); ++n) {
    const double w = std::norm(c[n]);
    const double an = core::ladder_coefficient(p, n);
    const double an1 = core::ladder_coefficient(p, n + 1);
    s.n1 += n * w;
    s.n2 += static_cast<double>(n) * n * w;
    s.parity += n % 2 == 0 ? w : -w;
    s.a_dag_a += an * an * w;
    s.a_a_dag += an1 * an1 * w;
    if (n >= 1) s.a1 += std::conj(c[n - 1]) * an * c[n];
    if (n >= 2) s.a2 += std::conj(c[n - 2]) * core::ladder_coefficient(p, n - 1) * an * c[n];
  }
  return s;
}

double mean_n(ParaBoseOrder p, Complex alpha, Method method) {
  require_method(method, alpha);
  const double r = std::abs(alpha);
  switch (method) {
    case Method::asymptotic: return detail::mean_asymptotic(p, r);
    case Method::direct_sum: return direct_sums(p, alpha).n1;
    default: return detail::mean_analytic(p, r);
  }
}

double second_moment_n(ParaBoseOrder p, Complex alpha, Method method) {
  require_method(method, alpha);
  const double r = std::abs(alpha);
  switch (method) {
    case Method::asymptotic: return detail::second_moment_asymptotic(p, r);
    case Method::direct_sum: return direct_sums(p, alpha).n2;
    default: return detail::second_moment_analytic(p, r);
  }
}

double variance_n(ParaBoseOrder p, Complex alpha, Method method) {
  require_method(method, alpha);
  const double r = std::abs(alpha);
  switch (method) {
    case Method::asymptotic: return detail::variance_asymptotic(p, r);
    case Method::direct_sum: {
      const DirectSums s = direct_sums(p, alpha);
      return s.n2 - s.n1 * s.n1;
    }
    default: {
      const double m = detail::mean_analytic(p, r);
      return detail::second_moment_analytic(p, r) - m * m;
    }
  }
}

double mandel_q(ParaBoseOrder p, Complex alpha, Method method) {
  require_method(method, alpha);
  const double r = std::abs(alpha);
  if (r == 0.0) throw NumericError(ErrorCode::DegenerateState, "Mandel Q is undefined for the vacuum");
  switch (method) {
    case Method::asymptotic: return detail::mandel_q_asymptotic(p, r);
    case Method::direct_sum: {
      const DirectSums s = direct_sums(p, alpha);
      return (s.n2 - s.n1 * s.n1 - s.n1) / s.n1;
    }
    default: {
      const double m = detail::mean_analytic(p, r);
      const double v = detail::second_moment_analytic(p, r) - m * m;
      return (v - m) / m;
    }
  }
}

std::pair<double, double> quadrature_means(ParaBoseOrder p, Complex alpha, Method method) {
  require_method(method, alpha);
  switch (method) {
    case Method::asymptotic: return detail::quadrature_means_asymptotic(alpha);
    case Method::direct_sum: {
      const Complex a1 = direct_sums(p, alpha).a1;
      return {kSqrt2 * a1.real(), kSqrt2 * a1.imag()};
    }
    default: {
      const double h = aux_h(p, std::abs(alpha));
      return {kSqrt2 * alpha.real() * h, kSqrt2 * alpha.imag() * h};
    }
  }
}

std::pair<double, double> quadrature_second_moments(ParaBoseOrder p, Complex alpha, Method method) {
  require_method(method, alpha);
  const double r = std::abs(alpha);
  const double pd = p.as_double();
  switch (method) {
    case Method::asymptotic: return detail::quadrature_second_moments_asymptotic(p, alpha);
    case Method::direct_sum: return second_moments_from(direct_sums(p, alpha));
    default: break;
  }
  if (r == 0.0) return {pd / 2.0, pd / 2.0};
  // (alpha + alpha^*)^2 = 4 Re^2 and -(alpha^* - alpha)^2 = 4 Im^2.
  const double sx = 4.0 * alpha.real() * alpha.real();
  const double sy = 4.0 * alpha.imag() * alpha.imag();
  if (p.value() == 2) {
    const double f = aux_f(r);
    return {1.0 + 0.5 * sx * f, 1.0 + 0.5 * sy * f};
  }
  const double bracket = 0.5 + (pd - 1.0) / (4.0 * (pd - 2.0) * r * r) * aux_g(p, r);
  return {pd / 2.0 + sx * bracket, pd / 2.0 + sy * bracket};
}

std::pair<double, double> quadrature_variances(ParaBoseOrder p, Complex alpha, Method method) {
  require_method(method, alpha);
  const double r = std::abs(alpha);
  const double pd = p.as_double();
  switch (method) {
    case Method::asymptotic: return detail::quadrature_variances_asymptotic(p, alpha);
    case Method::direct_sum: {
      const DirectSums s = direct_sums(p, alpha);
      const auto [x2, y2] = second_moments_from(s);
      const double x = kSqrt2 * s.a1.real();
      const double y = kSqrt2 * s.a1.imag();
      return {x2 - x * x, y2 - y * y};
    }
    default: break;
  }
  if (r == 0.0) return {pd / 2.0, pd / 2.0};
  const double xi = aux_xi(p, r);
  const double base = p.value() == 2 ? 1.0 : pd / 2.0;
  return {base + 2.0 * alpha.real() * alpha.real() * xi, base + 2.0 * alpha.imag() * alpha.imag() * xi};
}

double robertson_bound(ParaBoseOrder p, Complex alpha, Method method) {
  require_method(method, alpha);
  const double pd = p.as_double();
  switch (method) {
    case Method::asymptotic: return 0.5;
    case Method::direct_sum: return 0.5 * std::fabs(1.0 + (pd - 1.0) * direct_sums(p, alpha).parity);
    default: return 0.5 * std::fabs(1.0 + (pd - 1.0) * parity_expectation(p, std::abs(alpha)));
  }
}

double uncertainty_product(ParaBoseOrder p, Complex alpha, Method method) {
  require_method(method, alpha);
  switch (method) {
    case Method::asymptotic: return detail::uncertainty_product_asymptotic(p, alpha);
    case Method::direct_sum: {
      const auto [vx, vy] = quadrature_variances(p, alpha, Method::direct_sum);
      return std::sqrt(vx * vy);
    }
    default: return product_analytic(p, alpha);
  }
}

MomentReport moment_report(ParaBoseOrder p, Complex alpha, Method method, std::optional<int> truncation) {
  require_method(method, alpha);
  MomentReport rep;
  rep.method = method;
  const double r = std::abs(alpha);
  const double pd = p.as_double();

  if (method == Method::direct_sum) {
    // One amplitude vector serves every statistic.
    const DirectSums s = direct_sums(p, alpha, truncation);
    const auto [x2, y2] = second_moments_from(s);
    rep.mean_n = s.n1;
    rep.var_n = s.n2 - s.n1 * s.n1;
    if (r > 0.0) rep.mandel_q = (rep.var_n - rep.mean_n) / rep.mean_n;
    rep.mean_x = kSqrt2 * s.a1.real();
    rep.mean_y = kSqrt2 * s.a1.imag();
    rep.var_x = x2 - rep.mean_x * rep.mean_x;
    rep.var_y = y2 - rep.mean_y * rep.mean_y;
    rep.uncertainty_product = std::sqrt(rep.var_x * rep.var_y);
    rep.robertson_bound = 0.5 * std::fabs(1.0 + (pd - 1.0) * s.parity);
    return rep;
  }

  rep.mean_n = mean_n(p, alpha, method);
  rep.var_n = variance_n(p, alpha, method);
  if (r > 0.0) rep.mandel_q = mandel_q(p, alpha, method);
  std::tie(rep.mean_x, rep.mean_y) = quadrature_means(p, alpha, method);
  std::tie(rep.var_x, rep.var_y) = quadrature_variances(p, alpha, method);
  rep.uncertainty_product = uncertainty_product(p, alpha, method);
  rep.robertson_bound = robertson_bound(p, alpha, method);
  return rep;
}

}  // namespace parabose::moments
