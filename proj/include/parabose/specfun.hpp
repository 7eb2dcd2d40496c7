#pragma once

// Special functions needed by the para-Bose closed forms: Pochhammer symbols,
// the confluent (1F1) and generalized (2F2) hypergeometric functions, the
// Dawson integral and the digamma function. All functions are pure.

#include <cmath>
#include <limits>

namespace parabose::specfun {

/// Numeric result carrying an a-posteriori error estimate.
struct EvalResult {
  double value = 0.0;
  /// Upper bound on truncation plus accumulated rounding error of the scheme used.
  double abs_error_estimate = 0.0;
  int terms_used = 0;
};

/// sign * exp(log_abs); sign is 0 for an exact zero (log_abs = -inf).
struct SignedLog {
  int sign = 1;
  double log_abs = 0.0;

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
  static SignedLog from(double x) {
    if (x == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    return {x < 0.0 ? -1 : 1, std::log(std::fabs(x))};
  }
};

inline SignedLog operator*(SignedLog a, SignedLog b) {
  return {a.sign * b.sign, a.log_abs + b.log_abs};
}

/// Series tuning shared by the hypergeometric evaluators.
inline constexpr int kTermCap = 10000;
inline constexpr double kTolerance = 1e-12;

/// Rising factorial (x)_j = x(x+1)...(x+j-1). Throws OverflowRequiresLogSpace
/// when the product is not representable as a double.
double pochhammer(double x, unsigned j);

/// Rising factorial in sign/log-magnitude form; exact zero when x is a
/// nonpositive integer with j > -x.
SignedLog log_pochhammer(double x, unsigned j);

/// log Gamma(x) with sign of Gamma(x); reentrant (no signgam).
SignedLog log_gamma(double x);

/// log(n!).
double log_factorial(unsigned n);

enum class Hyp1f1Route {
  automatic,  ///< direct series for z >= 0, Kummer image for z < 0
  direct,     ///< always sum sum_k (a)_k z^k / ((b)_k k!)
  kummer,     ///< always e^z 1F1(b-a, b; -z)
};

/// Confluent hypergeometric function 1F1(a; b; z) for real arguments, b > 0.
/// Terminating polynomials (a a nonpositive integer) and other series alike
/// are accumulated in double-word arithmetic.
EvalResult hyp1f1(double a, double b, double z, Hyp1f1Route route = Hyp1f1Route::automatic);

/// e^{-z} 1F1(a; b; z) for z >= 0; stays finite for arbitrarily large z by
/// switching to the large-z asymptotic expansion beyond z = 600.
EvalResult hyp1f1_scaled(double a, double b, double z);

/// log|e^{-z} 1F1(a; b; z)| with sign, for z >= 0 of any size. The scaling
/// is applied analytically, so callers never subtract two huge logarithms.
SignedLog log_hyp1f1_scaled(double a, double b, double z);

/// Generalized hypergeometric 2F2(a1, a2; b1, b2; z), b1, b2 > 0.
EvalResult hyp2f2(double a1, double a2, double b1, double b2, double z);

/// Dawson integral F(x) = e^{-x^2} int_0^x e^{t^2} dt.
double dawson(double x);

/// Digamma psi(x) for x > 0.
double digamma(double x);

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace parabose::specfun
