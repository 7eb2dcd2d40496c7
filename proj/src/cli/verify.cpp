#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "parabose/cli.hpp"
#include "parabose/core.hpp"
#include "parabose/errors.hpp"
#include "parabose/moments.hpp"
#include "parabose/oracle.hpp"

namespace parabose::cli {

namespace {

struct Level {
  int max_order;
  int algebra_dim;
  int max_j;
};

Level level_of(VerifyLevel v) { return v == VerifyLevel::full ? Level{10, 256, 10} : Level{6, 64, 5}; }

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

SuiteResult algebra_suite(const Level& lv) {
  double worst = 0.0;
  for (int p = 1; p <= lv.max_order; ++p) {
    worst = std::max(worst, oracle::algebra_deviation(oracle::build_operators(ParaBoseOrder(p), lv.algebra_dim)).max());
  }
  // Mutation sanity: one wrong ladder coefficient must be caught.
  auto broken = oracle::build_operators(ParaBoseOrder(3), lv.algebra_dim);
  broken.a_lower(4, 5) *= 1.001;
  broken.a_raise = broken.a_lower.transpose();
  const double mutated = oracle::algebra_deviation(broken).max();
  const bool ok = worst <= 1e-12 && mutated > 1e-6;
  return {"algebra exactness", ok,
          "N=" + std::to_string(lv.algebra_dim) + " max deviation " + sci(worst) + ", broken ladder deviation " +
              sci(mutated)};
}

const std::vector<double> kModuli = {0.5, 1.0, std::sqrt(10.0), std::sqrt(15.0)};

SuiteResult normalization_suite(const Level& lv) {
  double worst = 0.0;
  for (int p = 1; p <= lv.max_order; ++p) {
    for (double r : kModuli) {
      const ParaBoseOrder po(p);
      const Complex a(r, 0.0);
      double mass = 0.0;
      for (int n = 0; n < truncation_rule(po, a); ++n) mass += core::occupation_probability(po, a, n);
      worst = std::max(worst, std::fabs(mass - 1.0));
    }
  }
  return {"normalization", worst <= 1e-10, "max |sum P(n) - 1| = " + sci(worst)};
}

SuiteResult identity_suite(const Level& lv, unsigned threads) {
  const int pmax = std::min(lv.max_order, 8);
  const int per_p = 2 * (lv.max_j + 1);
  std::vector<double> res(static_cast<std::size_t>(pmax * per_p));
  parallel_for(res.size(), threads, [&](std::size_t i) {
    const int p = static_cast<int>(i) / per_p + 1;
    const int j = static_cast<int>(i) % per_p / 2;
    const auto parity = i % 2 == 0 ? core::Parity::even : core::Parity::odd;
    res[i] = std::fabs(core::identity_resolution_residual(ParaBoseOrder(p), j, parity));
  });
  const double worst = *std::max_element(res.begin(), res.end());
  return {"identity resolution", worst < 1e-8,
          "p<=" + std::to_string(pmax) + ", j<=" + std::to_string(lv.max_j) + ", max residual " + sci(worst)};
}

SuiteResult oracle_suite(const Level& lv, unsigned threads) {
  const std::vector<Complex> alphas = {{0.5, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {std::sqrt(10.0), 0.0}, {0.0, std::sqrt(15.0)}};
  const std::size_t count = static_cast<std::size_t>(lv.max_order) * alphas.size();
  std::vector<double> report_dev(count);
  std::vector<double> amp_dev(count);
  parallel_for(count, threads, [&](std::size_t i) {
    const ParaBoseOrder p(static_cast<int>(i / alphas.size()) + 1);
    const Complex a = alphas[i % alphas.size()];
    const int dim = truncation_rule(p, a);
    const auto ops = oracle::build_operators(p, dim);
    const auto v = oracle::displace_vacuum(ops, a).vector;
    const auto amps = core::fock_amplitudes(p, a, dim);
    double d = 0.0;
    for (int n = 0; n < dim; ++n) {
      d = std::max(d, std::abs(amps.amplitudes[n] - v[n]));
      const double pn = core::occupation_probability(p, a, n);
      d = std::max(d, std::fabs(pn - std::norm(v[n])) / std::max(std::norm(v[n]), 1e-2));
    }
    amp_dev[i] = d;
    report_dev[i] = max_discrepancy(moments::moment_report(p, a), oracle::oracle_moments(ops, v));
  });
  const double worst_r = *std::max_element(report_dev.begin(), report_dev.end());
  const double worst_a = *std::max_element(amp_dev.begin(), amp_dev.end());
  return {"analytic vs oracle", worst_r < 1e-8 && worst_a < 1e-8,
          "p<=" + std::to_string(lv.max_order) + ", moments " + sci(worst_r) + ", amplitudes/P(n) " + sci(worst_a)};
}

SuiteResult asymptotic_suite(const Level& lv) {
  const std::vector<double> radii = {3.0, 5.0, 8.0, 12.0};
  const double phase = std::numbers::pi / 5.0;
  std::vector<std::string> failures;
  int checked = 0;
  for (int p : {2, 3, 4, 5, 8}) {
    if (p > lv.max_order) continue;
    const ParaBoseOrder po(p);
    // name -> (exact, asymptotic) at modulus r
    auto pairs = [&](double r) {
      const Complex a = std::polar(r, phase);
      const MomentReport ex = moments::moment_report(po, a, Method::analytic);
      const MomentReport as = moments::moment_report(po, a, Method::asymptotic);
      return std::vector<std::pair<std::string, std::pair<double, double>>>{
          {"mean_n", {ex.mean_n, as.mean_n}},
          {"var_n", {ex.var_n, as.var_n}},
          {"Q", {*ex.mandel_q, *as.mandel_q}},
          {"bound", {ex.robertson_bound, as.robertson_bound}},
          {"mean_x", {ex.mean_x, as.mean_x}},
          {"mean_y", {ex.mean_y, as.mean_y}},
          {"var_x", {ex.var_x, as.var_x}},
          {"var_y", {ex.var_y, as.var_y}},
          {"product", {ex.uncertainty_product, as.uncertainty_product}},
      };
    };
    std::vector<std::vector<double>> errs;
    std::vector<std::string> names;
    for (double r : radii) {
      const auto q = pairs(r);
      if (names.empty()) {
        for (const auto& [n, v] : q) names.push_back(n);
        errs.resize(q.size());
      }
      for (std::size_t k = 0; k < q.size(); ++k) {
        errs[k].push_back(std::fabs(q[k].second.second - q[k].second.first) / std::fabs(q[k].second.first));
      }
    }
    for (std::size_t k = 0; k < names.size(); ++k) {
      ++checked;
      // Below 1e-12 the difference is evaluation roundoff, not approximation
      // error (odd-p corrections are O(e^{-2|alpha|^2})); count it as zero.
      std::vector<double> e = errs[k];
      for (double& x : e) x = x < 1e-12 ? 0.0 : x;
      const bool monotone = std::is_sorted(e.rbegin(), e.rend());
      if (!monotone || !(e.back() < 0.01)) {
        failures.push_back("p=" + std::to_string(p) + " " + names[k] + " (" + sci(errs[k][0]) + ", " +
                           sci(errs[k][1]) + ", " + sci(errs[k][2]) + ", " + sci(errs[k][3]) + ")");
      }
    }
  }
  std::string detail = std::to_string(checked) + " forms checked";
  for (const auto& f : failures) detail += "; " + f;
  return {"asymptotic convergence", failures.empty(), detail};
}

SuiteResult critical_suite() {
  const double r = moments::critical_alpha(ParaBoseOrder(2));
  const double dev = std::fabs(r - 1.9018801);
  return {"critical alpha", dev < 1e-6, "p=2: " + format_double(r) + " (|dev| " + sci(dev) + ")"};
}

}  // namespace

std::vector<SuiteResult> run_verify(VerifyLevel level, const Config& cfg, std::ostream& log) {
  const Level lv = level_of(level);
  std::vector<SuiteResult> out;
  auto run_one = [&](auto&& suite) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult r = suite();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << " (" << sci(secs) << " s)\n";
    out.push_back(r);
  };
  // Failing suites keep their name even when they throw.
  auto named = [](const char* name, auto fn) {
    return [name, fn] {
      try {
        return fn();
      } catch (const std::exception& e) {
        return SuiteResult{name, false, std::string("exception: ") + e.what()};
      }
    };
  };
  run_one(named("algebra exactness", [&] { return algebra_suite(lv); }));
  run_one(named("normalization", [&] { return normalization_suite(lv); }));
  run_one(named("identity resolution", [&] { return identity_suite(lv, cfg.threads); }));
  run_one(named("analytic vs oracle", [&] { return oracle_suite(lv, cfg.threads); }));
  run_one(named("asymptotic convergence", [&] { return asymptotic_suite(lv); }));
  run_one(named("critical alpha", [&] { return critical_suite(); }));
  return out;
}

}  // namespace parabose::cli
