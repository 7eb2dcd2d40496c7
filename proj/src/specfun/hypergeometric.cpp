#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "parabose/double_word.hpp"
#include "parabose/errors.hpp"
#include "parabose/integrate.hpp"
#include "parabose/specfun.hpp"

namespace parabose::specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Beyond this argument e^{-z} 1F1 is taken from the large-z expansion.
constexpr double kAsymptoticSwitch = 600.0;
// Below this argument 2F2 is always summed directly.
constexpr double kDoubleWordSwitch = -20.0;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Call-site description, formatted only when an error is actually raised.
struct Where {
  const char* name;
  std::array<double, 5> args{};
  int count = 0;

  Where(const char* n, std::initializer_list<double> a) : name(n) {
    for (double v : a) args[count++] = v;
  }

  std::string str() const {
    std::ostringstream os;
    os.precision(17);
    os << name << "(";
    for (int i = 0; i < count; ++i) os << (i ? ", " : "") << args[i];
    os << ")";
    return os.str();
  }
};

inline std::string operator+(const Where& w, const char* tail) { return w.str() + tail; }
inline std::string operator+(const Where& w, const std::string& tail) { return w.str() + tail; }

struct SeriesSum {
  DoubleWord sum;
  double abs_sum = 0.0;    // sum of |terms|, drives the rounding estimate
  double tail = 0.0;       // bound on the neglected terms
  int terms = 0;
};

// Sums pFq (p == q == N) by term-ratio recurrence with both the terms and the
// running sum held in double-word arithmetic.
template <std::size_t N>
SeriesSum sum_series(const std::array<double, N>& a, const std::array<double, N>& b, double z,
                     const Where& what) {
  SeriesSum out;
  DoubleWord term(1.0);
  out.sum = term;
  out.abs_sum = 1.0;
  out.terms = 1;
  if (z == 0.0) return out;

  // The geometric tail bound is only trusted once every (a_i + k), (b_i + k)
  // factor is past its sign change, where the ratio decays monotonically.
  double monotone_from = 0.0;
  for (std::size_t i = 0; i < N; ++i) monotone_from = std::max({monotone_from, -a[i], -b[i]});

  for (int k = 0; k < kTermCap; ++k) {
    const double kd = static_cast<double>(k);
    DoubleWord num(z);
    DoubleWord den(kd + 1.0);
    for (std::size_t i = 0; i < N; ++i) {
      num = num * (a[i] + kd);
      den = den * (b[i] + kd);
    }
    const DoubleWord ratio = num / den;
    term = term * ratio;
    const double t = dw::abs(term);
    if (t == 0.0) {
      out.tail = 0.0;  // terminating polynomial
      return out;
    }
    out.sum = out.sum + term;
    out.abs_sum += t;
    out.terms = k + 2;
    if (!std::isfinite(out.sum.hi)) {
      throw NumericError(ErrorCode::OverflowRequiresLogSpace, what + " series overflow");
    }

    // Once the ratio |t_{k+1}/t_k| is below 1/2 and still decreasing (it
    // tends to 0 like |z|/k), the tail is bounded by a geometric series.
    const double r = std::fabs(ratio.to_double());
    const double next_r = [&] {
      double nn = std::fabs(z);
      double dd = kd + 2.0;
      for (std::size_t i = 0; i < N; ++i) {
        nn *= std::fabs(a[i] + kd + 1.0);
        dd *= std::fabs(b[i] + kd + 1.0);
      }
      return nn / dd;
    }();
    if (kd > monotone_from && next_r < 0.5 && next_r <= r) {
      const double tail = t * next_r / (1.0 - next_r);
      const double scale = std::max(dw::abs(out.sum), std::numeric_limits<double>::min());
      if (tail <= 1e-17 * scale) {
        out.tail = tail;
        return out;
      }
    }
  }
  throw NumericError(ErrorCode::NonConvergence,
                     what + " did not converge within " + std::to_string(kTermCap) + " terms");
}

EvalResult to_result(const SeriesSum& s) {
  EvalResult r;
  r.value = s.sum.to_double();
  r.abs_error_estimate =
      s.tail + 8.0 * s.terms * kDoubleWordEps * s.abs_sum + 0.5 * std::numeric_limits<double>::epsilon() * std::fabs(r.value);
  r.terms_used = s.terms;
  return r;
}

// Terminating 1F1 with a = -m: sum_k (a)_k z^k / ((b)_k k!), k = 0..m, summed
// in log-shifted form so that large |z| cannot overflow.
struct PolySum {
  SignedLog value;
  double log_abs_error = 0.0;
  int terms = 0;
};

PolySum polynomial_1f1(double a, double b, double z) {
  const int m = static_cast<int>(-a);
  std::vector<double> log_mag(m + 1);
  std::vector<int> sign(m + 1);
  log_mag[0] = 0.0;
  sign[0] = 1;
  int zero_at = -1;
  for (int k = 0; k < m; ++k) {
    const double num = (a + k) * z;
    const double den = (b + k) * (k + 1.0);
    if (num == 0.0) {
      zero_at = k + 1;
      break;
    }
    log_mag[k + 1] = log_mag[k] + std::log(std::fabs(num)) - std::log(std::fabs(den));
    sign[k + 1] = sign[k] * ((num < 0) != (den < 0) ? -1 : 1);
  }
  const int last = zero_at < 0 ? m : zero_at - 1;
  const auto peak_it = std::max_element(log_mag.begin(), log_mag.begin() + last + 1);
  const int peak = static_cast<int>(peak_it - log_mag.begin());
  const double shift = *peak_it;
  // Terms relative to the largest one by the exact ratio recurrence, run
  // outward from the peak in double-word arithmetic: every |t_k| <= 1, so
  // nothing overflows and each term keeps ~1e-30 relative accuracy.
  std::vector<DoubleWord> t(last + 1);
  t[peak] = DoubleWord(static_cast<double>(sign[peak]));
  for (int k = peak; k < last; ++k) {
    t[k + 1] = t[k] * dw::two_prod(a + k, z) / dw::two_prod(b + k, k + 1.0);
  }
  for (int k = peak; k > 0; --k) {
    t[k - 1] = t[k] * dw::two_prod(b + k - 1, static_cast<double>(k)) / dw::two_prod(a + k - 1, z);
  }
  DoubleWord acc(0.0);
  double abs_acc = 0.0;
  for (int k = 0; k <= last; ++k) {
    acc = acc + t[k];
    abs_acc += std::fabs(t[k].hi);
  }
  PolySum out;
  out.terms = last + 1;
  if (shift < 700.0) {
    // Peak magnitude by direct product, avoiding the exp(sum of logs) error.
    DoubleWord peak_abs(1.0);
    for (int k = 0; k < peak; ++k) {
      peak_abs = peak_abs * std::fabs(a + k) * std::fabs(z) / dw::two_prod(b + k, k + 1.0);
    }
    out.value = SignedLog::from((acc * peak_abs).to_double());
  } else {
    out.value = SignedLog::from(acc.to_double());
    out.value.log_abs += shift;
  }
  // Double-word rounding over the recurrences and the sum, the final
  // rounding to double, and the exp() applied to the shift by callers.
  const double rel = 8.0 * (last + 1) * (last + 1) * kDoubleWordEps;
  out.log_abs_error = shift + std::log(rel * abs_acc + 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(acc.to_double()));
  return out;
}

// Large-z expansion: 1F1(a;b;z) ~ Gamma(b)/Gamma(a) e^z z^{a-b}
//   * sum_k (b-a)_k (1-a)_k / (k! z^k), valid for z -> +inf.
struct AsymptoticSum {
  SignedLog log_value;  // of e^{-z} 1F1
  double rel_error = 0.0;
  int terms = 0;
};

AsymptoticSum asymptotic_scaled_1f1(double a, double b, double z) {
  double term = 1.0;
  double sum = 1.0;
  double prev = kInf;
  int k = 0;
  for (; k < kTermCap; ++k) {
    const double next = term * (b - a + k) * (1.0 - a + k) / ((k + 1.0) * z);
    if (next == 0.0) {
      term = 0.0;
      break;
    }
    if (std::fabs(next) >= std::fabs(term) && std::fabs(term) < prev) break;  // optimal truncation
    prev = std::fabs(term);
    term = next;
    sum += term;
    if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
  }
  const SignedLog gb = log_gamma(b);
  const SignedLog ga = log_gamma(a);
  AsymptoticSum out;
  out.log_value = SignedLog::from(sum);
  out.log_value.sign *= gb.sign * ga.sign;
  out.log_value.log_abs += gb.log_abs - ga.log_abs + (a - b) * std::log(z);
  out.rel_error = std::fabs(term) / std::fabs(sum) + 1e-15;
  out.terms = k + 1;
  return out;
}

void require_positive_b(double b, const Where& what) {
  if (!(b > 0.0)) throw NumericError(ErrorCode::InvalidParameter, what + ": lower parameter must be > 0");
}

EvalResult from_signed_log(SignedLog v, double rel_error, int terms, const Where& what) {
  EvalResult r;
  r.value = v.value();
  if (!std::isfinite(r.value)) {
    throw NumericError(ErrorCode::OverflowRequiresLogSpace, what + " exceeds double range");
  }
  r.abs_error_estimate = rel_error * std::fabs(r.value);
  r.terms_used = terms;
  return r;
}

// `log_scale` multiplies the polynomial by exp(log_scale).
EvalResult from_polynomial(const PolySum& p, double log_scale, const Where& what) {
  SignedLog v = p.value;
  v.log_abs += log_scale;
  EvalResult r = from_signed_log(v, 0.0, p.terms, what);
  r.abs_error_estimate = std::exp(p.log_abs_error + log_scale);
  return r;
}

EvalResult direct_1f1(double a, double b, double z, const Where& what) {
  if (is_nonpositive_integer(a)) {
    return from_polynomial(polynomial_1f1(a, b, z), 0.0, what);
  }
  return to_result(sum_series<1>({a}, {b}, z, what));
}

}  // namespace

SignedLog log_hyp1f1_scaled(double a, double b, double z) {
  const Where what("log_hyp1f1_scaled", {a, b, z});
  require_positive_b(b, what);
  if (z < 0.0) throw NumericError(ErrorCode::InvalidParameter, what + ": requires z >= 0");
  SignedLog v;
  if (is_nonpositive_integer(a)) {
    v = polynomial_1f1(a, b, z).value;
  } else if (z <= kAsymptoticSwitch) {
    // Scale before the logarithm; log(sum) - z would lose |z| * eps.
    return SignedLog::from(sum_series<1>({a}, {b}, z, what).sum.to_double() * std::exp(-z));
  } else {
    return asymptotic_scaled_1f1(a, b, z).log_value;
  }
  v.log_abs -= z;
  return v;
}

EvalResult hyp1f1_scaled(double a, double b, double z) {
  const Where what("hyp1f1_scaled", {a, b, z});
  require_positive_b(b, what);
  if (z < 0.0) throw NumericError(ErrorCode::InvalidParameter, what + ": requires z >= 0");
  if (is_nonpositive_integer(a)) {
    return from_polynomial(polynomial_1f1(a, b, z), -z, what);
  }
  if (z <= kAsymptoticSwitch) {
    EvalResult r = to_result(sum_series<1>({a}, {b}, z, what));
    const double scale = std::exp(-z);
    r.value *= scale;
    r.abs_error_estimate *= scale;
    return r;
  }
  const AsymptoticSum s = asymptotic_scaled_1f1(a, b, z);
  return from_signed_log(s.log_value, s.rel_error, s.terms, what);
}

EvalResult hyp1f1(double a, double b, double z, Hyp1f1Route route) {
  const Where what("hyp1f1", {a, b, z});
  require_positive_b(b, what);

  if (route == Hyp1f1Route::direct) return direct_1f1(a, b, z, what);
  if (route == Hyp1f1Route::kummer) {
    EvalResult inner = direct_1f1(b - a, b, -z, what);
    const double scale = std::exp(z);
    inner.value *= scale;
    inner.abs_error_estimate *= scale;
    if (!std::isfinite(inner.value)) {
      throw NumericError(ErrorCode::OverflowRequiresLogSpace, what + " exceeds double range");
    }
    return inner;
  }

  if (z == 0.0) return {1.0, 0.0, 1};
  if (is_nonpositive_integer(a)) return direct_1f1(a, b, z, what);
  if (z > 0.0) {
    if (z <= kAsymptoticSwitch) return to_result(sum_series<1>({a}, {b}, z, what));
    const AsymptoticSum s = asymptotic_scaled_1f1(a, b, z);
    SignedLog v = s.log_value;
    v.log_abs += z;
    return from_signed_log(v, s.rel_error, s.terms, what);
  }
  // Kummer: 1F1(a;b;z) = e^z 1F1(b-a;b;-z); the image has a positive argument
  // and therefore eventually same-sign terms.
  const double ap = b - a;
  const double zp = -z;
  if (is_nonpositive_integer(ap)) {
    return from_polynomial(polynomial_1f1(ap, b, zp), z, what);
  }
  if (zp <= kAsymptoticSwitch) {
    const SeriesSum s = sum_series<1>({ap}, {b}, zp, what);
    EvalResult inner = to_result(s);
    // A direct product keeps ulp accuracy; exp(log|v| + z) would carry
    // |z| * eps of relative noise, which adaptive quadrature over this
    // function cannot converge through.
    const double scale = std::exp(z);
    inner.value *= scale;
    inner.abs_error_estimate = inner.abs_error_estimate * scale + std::numeric_limits<double>::epsilon() * std::fabs(inner.value);
    return inner;
  }
  const AsymptoticSum s = asymptotic_scaled_1f1(ap, b, zp);
  // e^z * 1F1(ap; b; zp) = e^z * e^{zp} * scaled = scaled, since zp = -z.
  return from_signed_log(s.log_value, s.rel_error, s.terms, what);
}

namespace {

// Euler-type integral: 2F2(a_i, a_o; b_j, b_o; z)
//   = Gamma(b_j) / (Gamma(a_i) Gamma(b_j - a_i))
//     * int_0^1 t^{a_i - 1} (1 - t)^{b_j - a_i - 1} 1F1(a_o; b_o; z t) dt.
// Restricted to a_i >= 1 and b_j - a_i >= 1 so the weight is bounded.
bool euler_2f2(double a1, double a2, double b1, double b2, double z, EvalResult& out) {
  const std::array<std::array<double, 4>, 4> pairings = {{
      {a2, b2, a1, b1},
      {a1, b1, a2, b2},
      {a2, b1, a1, b2},
      {a1, b2, a2, b1},
  }};
  for (const auto& [ai, bj, ao, bo] : pairings) {
    if (!(ai >= 1.0 && bj - ai >= 1.0)) continue;
    const double e1 = ai - 1.0;
    const double e2 = bj - ai - 1.0;
    const SignedLog lb = log_gamma(bj);
    const SignedLog la = log_gamma(ai);
    const SignedLog lc = log_gamma(bj - ai);
    const double prefactor = lb.sign * la.sign * lc.sign * std::exp(lb.log_abs - la.log_abs - lc.log_abs);
    auto integrand = [&](double t) {
      const double w = (e1 == 0.0 ? 1.0 : std::pow(t, e1)) * (e2 == 0.0 ? 1.0 : std::pow(1.0 - t, e2));
      return w * hyp1f1(ao, bo, z * t).value;
    };
    const QuadratureResult q = integrate(integrand, 0.0, 1.0, 1e-12, 1e-300, 18);
    out.value = prefactor * q.value;
    out.abs_error_estimate = std::fabs(prefactor) * (q.abs_error + 1e-15 * q.l1_norm);
    out.terms_used = 0;
    return true;
  }
  return false;
}

}  // namespace

EvalResult hyp2f2(double a1, double a2, double b1, double b2, double z) {
  const Where what("hyp2f2", {a1, a2, b1, b2, z});
  require_positive_b(b1, what);
  require_positive_b(b2, what);
  if (z == 0.0) return {1.0, 0.0, 1};

  if (z > kDoubleWordSwitch) return to_result(sum_series<2>({a1, a2}, {b1, b2}, z, what));

  // Alternating regime: double-word series first, Euler integral when the
  // cancellation exceeds what 106 bits can hold.
  try {
    const EvalResult r = to_result(sum_series<2>({a1, a2}, {b1, b2}, z, what));
    if (r.abs_error_estimate <= kTolerance * std::max(1.0, std::fabs(r.value))) return r;
  } catch (const NumericError& e) {
    if (e.code() != ErrorCode::OverflowRequiresLogSpace) throw;
  }
  EvalResult out;
  if (euler_2f2(a1, a2, b1, b2, z, out)) return out;
  throw NumericError(ErrorCode::NonConvergence,
                     what + ": alternating series cancellation exceeds double-word precision");
}

}  // namespace parabose::specfun
