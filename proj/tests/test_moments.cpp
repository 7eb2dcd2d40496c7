#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "parabose/moments.hpp"
#include "parabose/oracle.hpp"
#include "references.hpp"
#include "support.hpp"

using namespace parabose;
using namespace parabose::moments;
using testing::close;

namespace {

const Complex I(0.0, 1.0);

void check_reports_agree(const MomentReport& a, const MomentReport& b, double rel, double abs_floor) {
  CHECK(close(a.mean_n, b.mean_n, rel, abs_floor));
  CHECK(close(a.var_n, b.var_n, rel, abs_floor));
  CHECK(a.mandel_q.has_value() == b.mandel_q.has_value());
  if (a.mandel_q && b.mandel_q) CHECK(close(*a.mandel_q, *b.mandel_q, rel, abs_floor));
  CHECK(close(a.mean_x, b.mean_x, rel, abs_floor));
  CHECK(close(a.mean_y, b.mean_y, rel, abs_floor));
  CHECK(close(a.var_x, b.var_x, rel, abs_floor));
  CHECK(close(a.var_y, b.var_y, rel, abs_floor));
  CHECK(close(a.uncertainty_product, b.uncertainty_product, rel, abs_floor));
  CHECK(close(a.robertson_bound, b.robertson_bound, rel, abs_floor));
}

}  // namespace

TEST_CASE("analytic moments: reference values") {
  for (const auto& r : testing::kMomentReferences) {
    CAPTURE(r.p);
    CAPTURE(r.alpha);
    const ParaBoseOrder p(r.p);
    CHECK(close(mean_n(p, r.alpha), r.mean_n, 1e-12));
    CHECK(close(variance_n(p, r.alpha), r.var_n, 1e-11));
    CHECK(close(mandel_q(p, r.alpha), r.q, 1e-10));
    const auto [mx, my] = quadrature_means(p, r.alpha);
    CHECK(close(mx, r.mean_x, 1e-12, 1e-14));
    CHECK(close(my, r.mean_y, 1e-12, 1e-14));
    const auto [vx, vy] = quadrature_variances(p, r.alpha);
    CHECK(close(vx, r.var_x, 1e-12));
    CHECK(close(vy, r.var_y, 1e-12));
    CHECK(close(uncertainty_product(p, r.alpha), r.product, 1e-12));
    CHECK(close(robertson_bound(p, r.alpha), r.bound, 1e-12));
  }
}

TEST_CASE("high order, large modulus") {
  // 40-digit Taylor state on 420 levels, 20 collinear sub-steps.
  CHECK(close(mean_n(ParaBoseOrder(200), 10.0), 100.50252525252525253, 1e-12));
}

TEST_CASE("boson limit") {
  const ParaBoseOrder p(1);
  for (Complex a : {Complex(0.5), Complex(1, 1), Complex(std::sqrt(10.0))}) {
    CAPTURE(a);
    const MomentReport m = moment_report(p, a);
    CHECK(close(m.mean_n, std::norm(a), 1e-13));
    CHECK(close(m.var_n, std::norm(a), 1e-12));
    CHECK(std::fabs(*m.mandel_q) < 1e-12);
    CHECK(close(m.var_x, 0.5, 1e-13));
    CHECK(close(m.var_y, 0.5, 1e-13));
    CHECK(close(m.uncertainty_product, 0.5, 1e-13));
    CHECK(close(m.robertson_bound, 0.5, 1e-13));
    CHECK(close(m.mean_x, std::sqrt(2.0) * a.real(), 1e-13));
    CHECK(close(m.mean_y, std::sqrt(2.0) * a.imag(), 1e-13, 1e-15));
  }
}

TEST_CASE("vacuum") {
  for (int p : {1, 2, 3, 4, 7}) {
    const MomentReport m = moment_report(ParaBoseOrder(p), 0.0);
    CHECK(m.mean_n == 0.0);
    CHECK_FALSE(m.mandel_q.has_value());
    CHECK(close(m.uncertainty_product, p / 2.0, 1e-14));
    CHECK(close(m.robertson_bound, p / 2.0, 1e-14));
    CHECK_THROWS_AS(mandel_q(ParaBoseOrder(p), 0.0), NumericError);
  }
  CHECK_THROWS_AS(aux_xi(ParaBoseOrder(3), 0.0), NumericError);
}

TEST_CASE("analytic, direct sums and oracle agree") {
  for (int p = 1; p <= 6; ++p) {
    for (Complex a : {Complex(0.5), Complex(1, 1), Complex(0, std::sqrt(15.0)), Complex(2.2, -1.4)}) {
      CAPTURE(p);
      CAPTURE(a);
      const ParaBoseOrder po(p);
      const MomentReport analytic = moment_report(po, a, Method::analytic);
      check_reports_agree(moment_report(po, a, Method::direct_sum), analytic, 1e-10, 1e-12);
      check_reports_agree(oracle::oracle_report(po, a), analytic, 1e-10, 1e-12);
    }
  }
}

TEST_CASE("direct sums report their truncation") {
  const DirectSums full = direct_sums(ParaBoseOrder(3), 2.0);
  CHECK(full.truncation == truncation_rule(ParaBoseOrder(3), 2.0));
  CHECK(full.tail_bound < 1e-12);
  const DirectSums cut = direct_sums(ParaBoseOrder(3), 2.0, 6);
  CHECK(cut.truncation == 6);
  CHECK(cut.tail_bound > 1e-3);
  CHECK_THROWS_AS(moment_report(ParaBoseOrder(3), 2.0, Method::oracle), NumericError);
}

TEST_CASE("statistics depend on the phase of alpha only through the quadratures") {
  const double r = 1.9;
  for (int p : {2, 3, 6}) {
    const ParaBoseOrder po(p);
    const double n0 = mean_n(po, r);
    const double mx0 = quadrature_means(po, r).first;
    for (double theta : {0.3, 1.1, std::numbers::pi / 2, 2.5, -2.0}) {
      const Complex a = std::polar(r, theta);
      CHECK(close(mean_n(po, a), n0, 1e-14));
      CHECK(close(mandel_q(po, a), mandel_q(po, r), 1e-12, 1e-14));  // Q(p=2) ~ 0 near r = 1.9
      CHECK(close(robertson_bound(po, a), robertson_bound(po, r), 1e-14));
      // <A> = alpha * (real function of |alpha|)
      const auto [mx, my] = quadrature_means(po, a);
      CHECK(close(Complex(mx, my), mx0 * std::polar(1.0, theta), 1e-13));
      // sigma_X^2 for angle theta equals sigma_Y^2 for theta + pi/2
      CHECK(close(quadrature_variances(po, a).first, quadrature_variances(po, a * I).second, 1e-13));
    }
  }
}

TEST_CASE("Robertson inequality") {
  for (int p = 1; p <= 10; ++p) {
    for (Complex a : {Complex(0.5), Complex(1, 1), Complex(std::sqrt(10.0)), Complex(0, std::sqrt(15.0)),
                      Complex(-2, 0.5), Complex(6, -7)}) {
      CAPTURE(p);
      CAPTURE(a);
      const MomentReport m = moment_report(ParaBoseOrder(p), a);
      if (p == 1) {
        CHECK(std::fabs(robertson_margin(m)) < 1e-12);
      } else {
        CHECK(robertson_margin(m) > 1e-6);
      }
    }
  }
}

TEST_CASE("super-Poissonian statistics at large modulus") {
  for (int p = 2; p <= 10; ++p) {
    CAPTURE(p);
    CHECK(variance_n(ParaBoseOrder(p), 10.0) > mean_n(ParaBoseOrder(p), 10.0));
    CHECK(mandel_q(ParaBoseOrder(p), 10.0) > 0.0);
  }
}

TEST_CASE("critical modulus") {
  // Reference roots: mpmath findroot on Q of the 40-digit Taylor state.
  CHECK(std::fabs(critical_alpha(ParaBoseOrder(2)) - 1.9018801507203651906) < 1e-8);
  CHECK(std::fabs(critical_alpha(ParaBoseOrder(3)) - 1.358672288537776406) < 1e-8);
  CHECK(std::fabs(critical_alpha(ParaBoseOrder(2), Method::analytic, 1e-12) - 1.9018801507203651906) < 1e-11);
  CHECK(mandel_q(ParaBoseOrder(2), 1.8) < 0.0);
  CHECK(mandel_q(ParaBoseOrder(2), 2.0) > 0.0);
  double prev = 10.0;
  for (int p = 2; p <= 10; ++p) {
    const double c = critical_alpha(ParaBoseOrder(p));
    CHECK(c < prev);
    prev = c;
  }
  CHECK_THROWS_AS(critical_alpha(ParaBoseOrder(1)), NumericError);
}

TEST_CASE("asymptotic forms converge to the closed forms") {
  const std::vector<double> radii = {3.0, 5.0, 8.0, 12.0};
  const Complex phase = std::polar(1.0, std::numbers::pi / 5);
  for (int p : {2, 3, 4, 5, 8}) {
    const ParaBoseOrder po(p);
    auto quantity = [&](int k, Complex a, Method m) {
      switch (k) {
        case 0: return mean_n(po, a, m);
        case 1: return variance_n(po, a, m);
        case 2: return mandel_q(po, a, m);
        case 3: return robertson_bound(po, a, m);
        case 4: return quadrature_variances(po, a, m).first;
        case 5: return quadrature_variances(po, a, m).second;
        default: return uncertainty_product(po, a, m);
      }
    };
    for (int k = 0; k < 7; ++k) {
      CAPTURE(p);
      CAPTURE(k);
      double prev = INFINITY;
      for (double r : radii) {
        const Complex a = r * phase;
        double e = testing::rel_err(quantity(k, a, Method::asymptotic), quantity(k, a, Method::analytic));
        if (e < 1e-12) e = 0.0;  // below evaluation roundoff
        CHECK(e <= prev);
        prev = e;
      }
      CHECK(prev < 1e-2);
    }
  }
  CHECK_THROWS_AS(mean_n(ParaBoseOrder(3), 2.5, Method::asymptotic), NumericError);
}

TEST_CASE("asymptotic <n^2> and sigma_n^2 carry no constant offset") {
  // The absolute residual must shrink like 1/|alpha|^2 (odd p: exponentially),
  // not level off at an O(1) constant. |alpha| = 48 also exercises 2F2 at
  // z = -4608.
  for (int p : {2, 3, 4, 5, 6, 8}) {
    const ParaBoseOrder po(p);
    for (int k = 0; k < 2; ++k) {
      CAPTURE(p);
      CAPTURE(k);
      auto residual = [&](double r) {
        const Complex a = std::polar(r, 0.6);
        return k == 0 ? second_moment_n(po, a, Method::asymptotic) - second_moment_n(po, a, Method::analytic)
                      : variance_n(po, a, Method::asymptotic) - variance_n(po, a, Method::analytic);
      };
      const double at24 = std::fabs(residual(24.0));
      const double at48 = std::fabs(residual(48.0));
      CHECK(std::isfinite(at48));
      CHECK(at48 < 0.3 * at24 + 1e-8);
      CHECK(at48 < 1e-3);
    }
  }
}

TEST_CASE("auxiliary functions") {
  // f - 1 = 2F2(1,1;3/2,2;-2r^2); r = 2 uses the reference at z = -8.
  CHECK(close(aux_f(2.0), 1.2482843840503099231, 1e-13));
  // p = 1: <Pi> = e^{-2r^2}
  CHECK(close(parity_expectation(ParaBoseOrder(1), 1.3), std::exp(-2 * 1.69), 1e-14));
  // p = 3: 1F1(-1; 1/2; z) = 1 - 2z
  CHECK(close(parity_expectation(ParaBoseOrder(3), 1.0), std::exp(-2.0) * (1 - 4.0), 1e-14));
  const AuxiliaryFunctions aux = auxiliary(ParaBoseOrder(5), 1.7);
  CHECK(aux.g == aux_g(ParaBoseOrder(5), 1.7));
  CHECK(aux.h == aux_h(ParaBoseOrder(5), 1.7));
  CHECK(aux.xi == aux_xi(ParaBoseOrder(5), 1.7));
}
