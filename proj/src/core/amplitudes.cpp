#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "parabose/core.hpp"
#include "parabose/errors.hpp"

namespace parabose::core {

namespace {

using specfun::SignedLog;

void require_level(int n) {
  if (n < 0) throw NumericError(ErrorCode::InvalidParameter, "Fock level must be >= 0, got " + std::to_string(n));
}

double first_parameter(ParaBoseOrder p) { return (1.0 - p.as_double()) / 2.0; }

// Second parameter of the hypergeometric factor: j + 1/2 for n = 2j,
// j + 3/2 for n = 2j + 1; both equal (n + 1)/2 and (n + 2)/2 respectively.
double second_parameter(int n) { return n % 2 == 0 ? (n + 1) / 2.0 : (n + 2) / 2.0; }

// j! (p/2)_j for n = 2j, j! (p/2)_{j+1} for n = 2j + 1, in log form.
double log_factorial_weight(ParaBoseOrder p, int n) {
  const unsigned j = static_cast<unsigned>(n / 2);
  const unsigned m = n % 2 == 0 ? j : j + 1;
  return specfun::log_factorial(j) + specfun::log_pochhammer(p.as_double() / 2.0, m).log_abs;
}

SignedLog radial_factor(ParaBoseOrder p, double r, int n) {
  const double z = r * r / 2.0;
  return SignedLog::from(specfun::hyp1f1(first_parameter(p), second_parameter(n), z).value);
}

// exp(i n arg(alpha)), exactly real when alpha is real.
Complex phase_power(Complex alpha, int n) {
  if (alpha.imag() == 0.0) return (alpha.real() < 0.0 && n % 2 == 1) ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
  return std::polar(1.0, n * std::arg(alpha));
}

}  // namespace

double ladder_coefficient(ParaBoseOrder p, int n) {
  require_level(n);
  if (n == 0) return 0.0;
  return n % 2 == 0 ? std::sqrt(static_cast<double>(n)) : std::sqrt(n - 1.0 + p.as_double());
}

Complex fock_amplitude(ParaBoseOrder p, Complex alpha, int n) {
  require_level(n);
  const double r = std::abs(alpha);
  if (r == 0.0) return n == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);

  const SignedLog f = radial_factor(p, r, n);
  if (f.sign == 0) return {0.0, 0.0};
  const double log_mag = -r * r / 2.0 + n * std::log(std::sqrt(2.0) * r) - specfun::log_factorial(n) +
                         0.5 * log_factorial_weight(p, n) + f.log_abs;
  return static_cast<double>(f.sign) * std::exp(log_mag) * phase_power(alpha, n);
}

FockAmplitudes fock_amplitudes(ParaBoseOrder p, Complex alpha, std::optional<int> truncation) {
  const int n_max = truncation.value_or(truncation_rule(p, alpha));
  if (n_max < 1) throw NumericError(ErrorCode::InvalidParameter, "truncation must be >= 1");
  FockAmplitudes out{p, alpha, {}, n_max, 0.0};
  out.amplitudes.reserve(static_cast<std::size_t>(n_max));
  double mass = 0.0;
  double comp = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const Complex c = fock_amplitude(p, alpha, n);
    out.amplitudes.push_back(c);
    const double y = std::norm(c) - comp;
    const double t = mass + y;
    comp = (t - mass) - y;
    mass = t;
  }
  out.tail_bound = std::fabs(1.0 - mass) + 4.0 * n_max * std::numeric_limits<double>::epsilon();
  return out;
}

double occupation_probability(ParaBoseOrder p, Complex alpha, int n) {
  require_level(n);
  const double r = std::abs(alpha);
  if (r == 0.0) return n == 0 ? 1.0 : 0.0;

  const SignedLog f = radial_factor(p, r, n);
  if (f.sign == 0) return 0.0;
  // 2^n (|alpha|^n / n!)^2 e^{-|alpha|^2} x {(n/2)! (p/2)_{n/2} | ((n-1)/2)! (p/2)_{(n+1)/2}} x F^2
  const double log_p = n * std::log(2.0) + 2.0 * (n * std::log(r) - specfun::log_factorial(n)) - r * r +
                       log_factorial_weight(p, n) + 2.0 * f.log_abs;
  return std::exp(log_p);
}

}  // namespace parabose::core
