#pragma once

// Per-method building blocks shared by the moments translation units.

#include <utility>

#include "parabose/types.hpp"

namespace parabose::moments::detail {

double mean_analytic(ParaBoseOrder p, double r);
double second_moment_analytic(ParaBoseOrder p, double r);

double mean_asymptotic(ParaBoseOrder p, double r);
double second_moment_asymptotic(ParaBoseOrder p, double r);
double variance_asymptotic(ParaBoseOrder p, double r);
double mandel_q_asymptotic(ParaBoseOrder p, double r);
std::pair<double, double> quadrature_means_asymptotic(Complex alpha);
std::pair<double, double> quadrature_second_moments_asymptotic(ParaBoseOrder p, Complex alpha);
std::pair<double, double> quadrature_variances_asymptotic(ParaBoseOrder p, Complex alpha);
double uncertainty_product_asymptotic(ParaBoseOrder p, Complex alpha);

// ln(2 r^2), which every p = 2 and p = 4 asymptotic line is written in.
double log_two_r2(double r);

}  // namespace parabose::moments::detail
