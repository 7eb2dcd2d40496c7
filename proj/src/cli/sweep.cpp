#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

#include "parabose/cli.hpp"
#include "parabose/core.hpp"
#include "parabose/errors.hpp"
#include "parabose/moments.hpp"
#include "parabose/oracle.hpp"

namespace parabose::cli {

namespace {

struct GridPoint {
  ParaBoseOrder p;
  Complex alpha;
};

std::vector<GridPoint> grid(const SweepSpec& spec) {
  std::vector<GridPoint> out;
  for (ParaBoseOrder p : spec.orders) {
    for (Complex a : spec.alphas) out.push_back({p, a});
  }
  return out;
}

std::string context(const GridPoint& g) {
  return "p=" + std::to_string(g.p.value()) + ", alpha=" + format_double(g.alpha.real()) + "+" +
         format_double(g.alpha.imag()) + "i";
}

[[noreturn]] void rethrow_with(const NumericError& e, const std::string& where) {
  throw NumericError(e.code(), "[" + where + "] " + e.what());
}

std::string csv_prefix(const GridPoint& g) {
  return std::to_string(g.p.value()) + "," + format_double(g.alpha.real()) + "," + format_double(g.alpha.imag());
}

MomentReport report_for(const GridPoint& g, Method m, const Config& cfg) {
  if (m == Method::oracle) return oracle::oracle_report(g.p, g.alpha, cfg.truncation);
  return moments::moment_report(g.p, g.alpha, m, m == Method::direct_sum ? cfg.truncation : std::nullopt);
}

// Occupation probabilities of one grid point for one method, level by level.
class Distribution {
 public:
  Distribution(const GridPoint& g, Method m, const Config& cfg) : g_(g), m_(m) {
    if (m == Method::oracle) {
      const auto ops = oracle::build_operators(g.p, cfg.truncation.value_or(truncation_rule(g.p, g.alpha)));
      oracle_ = oracle::displace_vacuum(ops, g.alpha).vector;
    } else if (m == Method::asymptotic) {
      throw NumericError(ErrorCode::InvalidParameter, "the distribution has no asymptotic form");
    }
  }

  double at(int n) const {
    switch (m_) {
      case Method::direct_sum: return std::norm(core::fock_amplitude(g_.p, g_.alpha, n));
      case Method::oracle:
        if (n >= oracle_.size()) {
          throw NumericError(ErrorCode::TruncationTooSmall, "level " + std::to_string(n) + " is outside the oracle space");
        }
        return std::norm(oracle_[n]);
      default: return core::occupation_probability(g_.p, g_.alpha, n);
    }
  }

 private:
  GridPoint g_;
  Method m_;
  Eigen::VectorXcd oracle_;
};

}  // namespace

void write_distribution(const SweepSpec& spec, const Config& cfg, std::ostream& csv) {
  const std::vector<GridPoint> points = grid(spec);
  std::vector<std::string> chunks(points.size());
  parallel_for(points.size(), cfg.threads, [&](std::size_t i) {
    const GridPoint& g = points[i];
    std::vector<Distribution> dists;
    for (Method m : spec.methods) dists.emplace_back(g, m, cfg);
    // The first method decides where the cumulative mass reaches 1 - tol.
    const int cap = 4 * truncation_rule(g.p, g.alpha);
    std::ostringstream os;
    double mass = 0.0;
    int n = 0;
    try {
      for (; n < cap && mass < 1.0 - cfg.tolerance; ++n) {
        for (std::size_t k = 0; k < dists.size(); ++k) {
          const double pn = dists[k].at(n);
          if (k == 0) mass += pn;
          os << csv_prefix(g) << ',' << n << ',' << format_double(pn) << ',' << to_string(spec.methods[k]) << '\n';
        }
      }
    } catch (const NumericError& e) {
      rethrow_with(e, context(g) + ", n=" + std::to_string(n));
    }
    if (mass < 1.0 - cfg.tolerance) {
      throw NumericError(ErrorCode::NonConvergence,
                         "[" + context(g) + "] cumulative mass " + format_double(mass) + " after " +
                             std::to_string(cap) + " levels");
    }
    chunks[i] = os.str();
  });
  csv << "p,re_alpha,im_alpha,n,P_n,method\n";
  for (const auto& c : chunks) csv << c;
}

void write_moments(const SweepSpec& spec, const Config& cfg, std::ostream& json) {
  const std::vector<GridPoint> points = grid(spec);
  std::vector<std::vector<MomentReport>> reports(points.size());
  parallel_for(points.size(), cfg.threads, [&](std::size_t i) {
    try {
      for (Method m : spec.methods) reports[i].push_back(report_for(points[i], m, cfg));
    } catch (const NumericError& e) {
      rethrow_with(e, context(points[i]));
    }
  });

  auto num = [](double x) { return std::isfinite(x) ? format_double(x) : std::string("null"); };
  json << "[";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const GridPoint& g = points[i];
    json << (i ? ",\n" : "\n") << "  {\n";
    json << "    \"p\": " << g.p.value() << ",\n";
    json << "    \"re_alpha\": " << num(g.alpha.real()) << ",\n";
    json << "    \"im_alpha\": " << num(g.alpha.imag()) << ",\n";
    json << "    \"reports\": [";
    for (std::size_t k = 0; k < reports[i].size(); ++k) {
      const MomentReport& r = reports[i][k];
      json << (k ? ",\n" : "\n") << "      {";
      json << "\"method\": \"" << to_string(r.method) << "\", ";
      json << "\"mean_n\": " << num(r.mean_n) << ", ";
      json << "\"var_n\": " << num(r.var_n) << ", ";
      json << "\"mandel_q\": " << (r.mandel_q ? num(*r.mandel_q) : std::string("null")) << ", ";
      json << "\"mean_x\": " << num(r.mean_x) << ", ";
      json << "\"mean_y\": " << num(r.mean_y) << ", ";
      json << "\"var_x\": " << num(r.var_x) << ", ";
      json << "\"var_y\": " << num(r.var_y) << ", ";
      json << "\"uncertainty_product\": " << num(r.uncertainty_product) << ", ";
      json << "\"robertson_bound\": " << num(r.robertson_bound) << "}";
    }
    json << "\n    ]";
    if (reports[i].size() > 1) {
      double worst = 0.0;
      for (std::size_t k = 1; k < reports[i].size(); ++k) {
        worst = std::max(worst, max_discrepancy(reports[i][k], reports[i][0]));
      }
      json << ",\n    \"max_discrepancy\": " << num(worst);
    }
    json << "\n  }";
  }
  json << "\n]\n";
}

bool write_uncertainty(const SweepSpec& spec, const Config& cfg, std::ostream& csv) {
  if (spec.methods.size() != 1) throw UsageError("uncertainty takes a single --method");
  const std::vector<GridPoint> points = grid(spec);
  std::vector<MomentReport> reports(points.size());
  parallel_for(points.size(), cfg.threads, [&](std::size_t i) {
    try {
      reports[i] = report_for(points[i], spec.methods.front(), cfg);
    } catch (const NumericError& e) {
      rethrow_with(e, context(points[i]));
    }
  });
  bool ok = true;
  csv << "p,re_alpha,im_alpha,product,bound,margin\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double margin = robertson_margin(reports[i]);
    ok = ok && margin >= -1e-10;
    csv << csv_prefix(points[i]) << ',' << format_double(reports[i].uncertainty_product) << ','
        << format_double(reports[i].robertson_bound) << ',' << format_double(margin) << '\n';
  }
  return ok;
}

void write_critical_alpha(const SweepSpec& spec, const Config& cfg, std::ostream& csv) {
  if (spec.methods.size() != 1) throw UsageError("critical-alpha takes a single --method");
  const Method m = spec.methods.front();
  if (m != Method::analytic && m != Method::direct_sum) {
    throw UsageError("critical-alpha supports --method analytic or direct_sum");
  }
  std::vector<std::string> rows(spec.orders.size());
  parallel_for(spec.orders.size(), cfg.threads, [&](std::size_t i) {
    const ParaBoseOrder p = spec.orders[i];
    std::string row = std::to_string(p.value()) + ",";
    try {
      row += format_double(moments::critical_alpha(p, m)) + ",ok";
    } catch (const NumericError& e) {
      if (e.code() != ErrorCode::NoRoot) rethrow_with(e, "p=" + std::to_string(p.value()));
      row += "nan,NoRoot";
    }
    rows[i] = row;
  });
  csv << "p,critical_alpha,status\n";
  for (const auto& r : rows) csv << r << '\n';
}

}  // namespace parabose::cli
