#pragma once

#include <optional>
#include <string_view>

namespace parabose {

/// How a statistic was obtained.
enum class Method { analytic, asymptotic, direct_sum, oracle };

constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::analytic: return "analytic";
    case Method::asymptotic: return "asymptotic";
    case Method::direct_sum: return "direct_sum";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::analytic, Method::asymptotic, Method::direct_sum, Method::oracle}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

/// Number and quadrature statistics of one state, all from one method.
struct MomentReport {
  double mean_n = 0.0;
  double var_n = 0.0;
  /// Undefined for the vacuum (mean_n = 0).
  std::optional<double> mandel_q;
  double mean_x = 0.0;
  double mean_y = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  double uncertainty_product = 0.0;
  double robertson_bound = 0.0;
  Method method = Method::analytic;
};

/// sigma_X sigma_Y minus its Robertson lower bound; never negative for a
/// physical state.
inline double robertson_margin(const MomentReport& r) { return r.uncertainty_product - r.robertson_bound; }

}  // namespace parabose
