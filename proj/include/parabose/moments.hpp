#pragma once

// Excitation-number and quadrature statistics of |p; alpha>. Every quantity
// is available in closed form (analytic), large-|alpha| form (asymptotic) and
// as an explicit sum over the Fock amplitudes (direct_sum).

#include <optional>
#include <utility>

#include "parabose/report.hpp"
#include "parabose/types.hpp"

namespace parabose::moments {

/// Auxiliary functions of the closed forms, all at one (p, |alpha|).
///   f   = 1 + 2F2(1,1; 3/2,2; -2r^2)
///   g   = 1 - e^{-2r^2} 1F1((3-p)/2, 1/2, 2r^2)
///   h   = 1 + (p-1) e^{-2r^2} 1F1((3-p)/2, 3/2, 2r^2)
///   xi  = (p-1) g / (2r^2 (p-2)) - h^2 + 1;  for p = 2 this slot holds f - h^2,
///         which is what the uncertainty product uses in its place.
///   chi1, chi2 enter <n^2> for p != 2, 4.
/// xi is NaN at r = 0.
struct AuxiliaryFunctions {
  double f = 0.0;
  double g = 0.0;
  double h = 0.0;
  double xi = 0.0;
  double chi1 = 0.0;
  double chi2 = 0.0;
};

double aux_f(double r);
double aux_g(ParaBoseOrder p, double r);
double aux_h(ParaBoseOrder p, double r);
double aux_chi1(ParaBoseOrder p, double r);
double aux_chi2(ParaBoseOrder p, double r);
/// Undefined at r = 0 (InvalidParameter).
double aux_xi(ParaBoseOrder p, double r);
AuxiliaryFunctions auxiliary(ParaBoseOrder p, double r);

/// <Pi> = e^{-2r^2} 1F1((1-p)/2, 1/2, 2r^2).
double parity_expectation(ParaBoseOrder p, double r);

/// Asymptotic forms refuse moduli below this.
inline constexpr double kAsymptoticMinModulus = 3.0;

double mean_n(ParaBoseOrder p, Complex alpha, Method method = Method::analytic);
double second_moment_n(ParaBoseOrder p, Complex alpha, Method method = Method::analytic);
/// <n^2> - <n>^2 for every method.
double variance_n(ParaBoseOrder p, Complex alpha, Method method = Method::analytic);
/// Throws DegenerateState at alpha = 0.
double mandel_q(ParaBoseOrder p, Complex alpha, Method method = Method::analytic);

/// (<X>, <Y>).
std::pair<double, double> quadrature_means(ParaBoseOrder p, Complex alpha, Method method = Method::analytic);
/// (<X^2>, <Y^2>).
std::pair<double, double> quadrature_second_moments(ParaBoseOrder p, Complex alpha,
                                                    Method method = Method::analytic);
/// (sigma_X^2, sigma_Y^2).
std::pair<double, double> quadrature_variances(ParaBoseOrder p, Complex alpha, Method method = Method::analytic);

/// (1/2)|1 + (p-1)<Pi>|.
double robertson_bound(ParaBoseOrder p, Complex alpha, Method method = Method::analytic);
/// sigma_X sigma_Y.
double uncertainty_product(ParaBoseOrder p, Complex alpha, Method method = Method::analytic);

/// All statistics from one method. Method::oracle is not served here (see
/// oracle::oracle_report). `truncation` applies to direct_sum only.
MomentReport moment_report(ParaBoseOrder p, Complex alpha, Method method = Method::analytic,
                           std::optional<int> truncation = {});

/// Fock-space sums behind Method::direct_sum, with the neglected mass.
struct DirectSums {
  double n1 = 0.0;       ///< sum n |c_n|^2
  double n2 = 0.0;       ///< sum n^2 |c_n|^2
  Complex a1;            ///< <A>
  Complex a2;            ///< <A^2>
  double a_dag_a = 0.0;  ///< <A^+ A>
  double a_a_dag = 0.0;  ///< <A A^+>
  double parity = 0.0;   ///< <Pi>
  int truncation = 0;
  double tail_bound = 0.0;
};

DirectSums direct_sums(ParaBoseOrder p, Complex alpha, std::optional<int> truncation = {});

/// |alpha| > 0 where Q(p, |alpha|) changes sign: sign scan at step 0.1 on
/// [0.1, 10], then bisection to `tolerance`. NoRoot without a sign change
/// (always for p = 1, where Q vanishes identically).
double critical_alpha(ParaBoseOrder p, Method method = Method::analytic, double tolerance = 1e-8);

/// Tabulated compound forms, transcribed term by term and kept only to be
/// compared against the definitional assemblies above.
namespace printed {

/// Full sigma_n^2 (three branches).
double variance_n(ParaBoseOrder p, double r);
/// Full Q (three branches).
double mandel_q(ParaBoseOrder p, double r);
/// Large-|alpha| sigma_n^2, p = 2 line.
double variance_n_asymptotic_p2(double r);
/// Large-|alpha| <n^2>, p = 2 line.
double second_moment_n_asymptotic_p2(double r);
/// Large-|alpha| sigma_n^2, p = 4 line.
double variance_n_asymptotic_p4(double r);
/// Large-|alpha| sigma_n^2, generic p line.
double variance_n_asymptotic_generic(ParaBoseOrder p, double r);
/// Large-|alpha| Q, p = 4 line.
double mandel_q_asymptotic_p4(double r);
/// Large-|alpha| <n^2>, p = 4 line.
double second_moment_n_asymptotic_p4(double r);
/// Large-|alpha| sigma_X^2 for p = 2 (uses 2 sqrt(pi) |alpha|^2).
double variance_x_asymptotic_p2(Complex alpha);
/// Large-|alpha| (sigma_X sigma_Y)^2 (squared, both branches).
double uncertainty_product_sq_asymptotic(ParaBoseOrder p, Complex alpha);

}  // namespace printed

}  // namespace parabose::moments
