#include <cmath>
#include <limits>

#include "parabose/core.hpp"
#include "parabose/errors.hpp"

namespace parabose::core {

namespace {

constexpr double kIncrementTolerance = 1e-14;
constexpr int kRequiredQuietTerms = 5;

}  // namespace

Complex overlap(ParaBoseOrder p, Complex alpha, Complex beta) {
  const double ra = std::abs(alpha);
  const double rb = std::abs(beta);
  const Complex w = std::conj(alpha) * beta;
  const double log_w = std::log(std::abs(w));
  const double a = (1.0 - p.as_double()) / 2.0;
  const double log_prefactor = -0.5 * (ra * ra + rb * rb);

  // sum_n w^n / n! * (p/2)_m / (1/2)_m * 1F1(a, m + 1/2, |alpha|^2/2) 1F1(a, m + 1/2, |beta|^2/2),
  // with m = ceil(n/2); even n gives A_j, odd n gives A_{j+1}.
  double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;
  auto accumulate = [](double& sum, double& comp, double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };

  int quiet = 0;
  double previous_log_mag = -std::numeric_limits<double>::infinity();
  for (int n = 0; n < specfun::kTermCap; ++n) {
    const unsigned m = static_cast<unsigned>((n + 1) / 2);
    const double b = m + 0.5;
    const double fa = specfun::hyp1f1(a, b, ra * ra / 2.0).value;
    const double fb = specfun::hyp1f1(a, b, rb * rb / 2.0).value;
    const double weight = fa * fb;

    double log_mag = -std::numeric_limits<double>::infinity();
    Complex increment(0.0, 0.0);
    if (n == 0) {
      increment = std::exp(log_prefactor) * weight;
      log_mag = std::log(std::fabs(increment.real()));
    } else if (w != Complex(0.0, 0.0) && weight != 0.0) {
      log_mag = log_prefactor + n * log_w - specfun::log_factorial(static_cast<unsigned>(n)) +
                specfun::log_pochhammer(p.as_double() / 2.0, m).log_abs -
                specfun::log_pochhammer(0.5, m).log_abs + std::log(std::fabs(weight));
      increment = std::polar(std::exp(log_mag), n * std::arg(w)) * (weight < 0.0 ? -1.0 : 1.0);
    }
    accumulate(re, re_c, increment.real());
    accumulate(im, im_c, increment.imag());

    // Count quiet terms only past the peak of |w|^n / n!.
    const bool decreasing = log_mag <= previous_log_mag || w == Complex(0.0, 0.0);
    if (std::abs(increment) < kIncrementTolerance && (decreasing || n > 2 * std::abs(w) + 10)) {
      if (++quiet >= kRequiredQuietTerms) return {re, im};
    } else {
      quiet = 0;
    }
    if (weight != 0.0) previous_log_mag = log_mag;
  }
  throw NumericError(ErrorCode::NonConvergence, "overlap series did not converge");
}

}  // namespace parabose::core
