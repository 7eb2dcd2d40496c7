#pragma once

// Double-word ("double-double") arithmetic built from error-free transforms.
// A value is hi + lo with |lo| <= ulp(hi)/2, giving ~106 bits of significand.
// Algorithms follow Joldes, Muller & Popescu, "Tight and rigorous error bounds
// for basic building blocks of double-word arithmetic" (2017).

#include <cmath>

namespace parabose {

struct DoubleWord {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleWord() = default;
  constexpr DoubleWord(double h) : hi(h), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr DoubleWord(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

namespace dw {

inline DoubleWord two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DoubleWord fast_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleWord two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleWord add(DoubleWord x, double y) {
  const DoubleWord s = two_sum(x.hi, y);
  return fast_two_sum(s.hi, s.lo + x.lo);
}

inline DoubleWord add(DoubleWord x, DoubleWord y) {
  const DoubleWord s = two_sum(x.hi, y.hi);
  const DoubleWord t = two_sum(x.lo, y.lo);
  const DoubleWord u = fast_two_sum(s.hi, s.lo + t.hi);
  return fast_two_sum(u.hi, t.lo + u.lo);
}

inline DoubleWord mul(DoubleWord x, double y) {
  const DoubleWord c = two_prod(x.hi, y);
  return fast_two_sum(c.hi, std::fma(x.lo, y, c.lo));
}

inline DoubleWord mul(DoubleWord x, DoubleWord y) {
  const DoubleWord c = two_prod(x.hi, y.hi);
  const double t = std::fma(x.lo, y.hi, x.hi * y.lo);
  return fast_two_sum(c.hi, c.lo + t);
}

inline DoubleWord div(DoubleWord x, double y) {
  const double th = x.hi / y;
  const DoubleWord p = two_prod(th, y);
  const double dh = x.hi - p.hi;
  const double dl = x.lo - p.lo;
  const double tl = (dh + dl) / y;
  return fast_two_sum(th, tl);
}

inline DoubleWord div(DoubleWord x, DoubleWord y) {
  const double th = x.hi / y.hi;
  const DoubleWord r = mul(y, th);
  const double ph = x.hi - r.hi;
  const double dl = x.lo - r.lo;
  const double d = ph + dl;
  const double tl = d / y.hi;
  return fast_two_sum(th, tl);
}

inline DoubleWord neg(DoubleWord x) { return {-x.hi, -x.lo}; }

inline double abs(DoubleWord x) { return std::fabs(x.hi + x.lo); }

}  // namespace dw

inline DoubleWord operator+(DoubleWord x, DoubleWord y) { return dw::add(x, y); }
inline DoubleWord operator+(DoubleWord x, double y) { return dw::add(x, y); }
inline DoubleWord operator-(DoubleWord x, DoubleWord y) { return dw::add(x, dw::neg(y)); }
inline DoubleWord operator*(DoubleWord x, DoubleWord y) { return dw::mul(x, y); }
inline DoubleWord operator*(DoubleWord x, double y) { return dw::mul(x, y); }
inline DoubleWord operator/(DoubleWord x, DoubleWord y) { return dw::div(x, y); }
inline DoubleWord operator/(DoubleWord x, double y) { return dw::div(x, y); }

/// Unit roundoff of double-word arithmetic, 2^-104 (used in error estimates).
inline constexpr double kDoubleWordEps = 4.93038065763132e-32;

}  // namespace parabose
