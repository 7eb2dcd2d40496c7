#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "parabose/cli.hpp"
#include "parabose/errors.hpp"

namespace parabose::cli {

namespace {

constexpr const char* kVersion = "parabose 1.0.0";

struct Options {
  std::string orders;
  std::string alpha_mod;
  std::string alpha_phase;
  std::string alpha_re;
  std::string alpha_im;
  std::string method;
  std::string out;
  std::string config;
  std::optional<double> tolerance;
  std::optional<int> truncation;
  std::optional<unsigned> threads;
  std::string level = "quick";
};

struct Defaults {
  const char* orders;
  std::vector<double> moduli;
  const char* method;
};

void add_grid_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--orders", o.orders, "para-Bose orders, e.g. 1,2,5-7");
  cmd->add_option("--alpha-mod", o.alpha_mod, "alpha moduli, comma list; sqrt(x) allowed");
  cmd->add_option("--alpha-phase", o.alpha_phase, "alpha phases in radians, comma list");
  cmd->add_option("--alpha-re", o.alpha_re, "alpha real parts, comma list");
  cmd->add_option("--alpha-im", o.alpha_im, "alpha imaginary parts, comma list");
  cmd->add_option("--method", o.method, "analytic | asymptotic | direct_sum | oracle, a comma list, or all");
}

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  cmd->add_option("--tolerance", o.tolerance, "probability-mass tolerance")->check(CLI::Range(1e-300, 0.5));
  cmd->add_option("--truncation", o.truncation, "fixed Fock dimension for direct sums and the oracle")
      ->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--config", o.config, "key=value config file (fallback: $PARABOSE_CONFIG)");
  cmd->add_option("--threads", o.threads, "worker threads (0: all cores)");
}

Config resolve_config(const Options& o) {
  Config cfg;
  if (!o.config.empty()) {
    cfg = load_config(o.config);
  } else if (const char* env = std::getenv("PARABOSE_CONFIG"); env != nullptr && *env != '\0') {
    cfg = load_config(env);
  }
  if (o.tolerance) cfg.tolerance = *o.tolerance;
  if (o.truncation) cfg.truncation = *o.truncation;
  if (o.threads) cfg.threads = *o.threads;
  return cfg;
}

// "all", one method, or a comma list; the first listed is the reference.
std::vector<Method> resolve_methods(const std::string& text) {
  if (text == "all") return {Method::analytic, Method::direct_sum, Method::oracle};
  std::vector<Method> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto m = parse_method(item);
    if (!m) throw UsageError("unknown method '" + item + "'");
    out.push_back(*m);
  }
  if (out.empty()) throw UsageError("empty method list");
  return out;
}

SweepSpec resolve_spec(const Options& o, const Defaults& d) {
  SweepSpec spec;
  for (int p : parse_orders(o.orders.empty() ? d.orders : o.orders)) spec.orders.emplace_back(p);
  const bool polar = !o.alpha_mod.empty() || !o.alpha_phase.empty();
  const bool cartesian = !o.alpha_re.empty() || !o.alpha_im.empty();
  if (polar && cartesian) throw UsageError("give alpha as modulus/phase or as re/im, not both");
  if (cartesian) {
    spec.alphas = alphas_from_cartesian(o.alpha_re.empty() ? std::vector<double>{0.0} : parse_reals(o.alpha_re),
                                        o.alpha_im.empty() ? std::vector<double>{0.0} : parse_reals(o.alpha_im));
  } else {
    spec.alphas = alphas_from_polar(o.alpha_mod.empty() ? d.moduli : parse_reals(o.alpha_mod),
                                    o.alpha_phase.empty() ? std::vector<double>{0.0} : parse_reals(o.alpha_phase));
  }
  spec.methods = resolve_methods(o.method.empty() ? d.method : o.method);
  return spec;
}

std::string sidecar(const std::string& command, const SweepSpec& spec, const Config& cfg) {
  std::ostringstream os;
  os << "{\n  \"generator\": \"" << kVersion << "\",\n  \"command\": \"" << command << "\",\n  \"orders\": [";
  for (std::size_t i = 0; i < spec.orders.size(); ++i) os << (i ? ", " : "") << spec.orders[i].value();
  os << "],\n  \"alphas\": [";
  for (std::size_t i = 0; i < spec.alphas.size(); ++i) {
    os << (i ? ", " : "") << "[" << format_double(spec.alphas[i].real()) << ", "
       << format_double(spec.alphas[i].imag()) << "]";
  }
  os << "],\n  \"methods\": [";
  for (std::size_t i = 0; i < spec.methods.size(); ++i) os << (i ? ", " : "") << "\"" << to_string(spec.methods[i]) << "\"";
  os << "],\n  \"tolerance\": " << format_double(cfg.tolerance) << ",\n  \"truncation\": "
     << (cfg.truncation ? std::to_string(*cfg.truncation) : std::string("\"rule\"")) << "\n}\n";
  return os.str();
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!(f << body)) throw std::runtime_error("cannot write " + path);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Statistics of para-Bose displaced-vacuum states"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto* dist = app.add_subcommand("distribution", "occupation probabilities P(n) as CSV");
  auto* mom = app.add_subcommand("moments", "number and quadrature statistics as JSON");
  auto* unc = app.add_subcommand("uncertainty", "uncertainty product vs Robertson bound as CSV");
  auto* crit = app.add_subcommand("critical-alpha", "|alpha| where Q changes sign, as CSV");
  auto* ver = app.add_subcommand("verify", "run the self-verification suites");
  for (auto* c : {dist, mom, unc, crit}) add_grid_flags(c, o);
  for (auto* c : {dist, mom, unc, crit, ver}) add_common_flags(c, o);
  ver->add_option("level", o.level, "quick | full")->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    const Config cfg = resolve_config(o);
    if (ver->parsed()) {
      std::ostringstream log;
      const auto suites = run_verify(o.level == "full" ? VerifyLevel::full : VerifyLevel::quick, cfg, log);
      bool ok = true;
      for (const auto& s : suites) ok = ok && s.passed;
      log << (ok ? "verify: all suites passed\n" : "verify: FAILED\n");
      write_output(o.out, log.str());
      if (!o.out.empty()) std::cout << log.str();
      return ok ? kSuccess : kVerificationFailure;
    }

    const std::vector<double> fig_alphas = {std::sqrt(0.5), 1.0, std::sqrt(10.0), std::sqrt(15.0)};
    std::ostringstream body;
    std::string command;
    SweepSpec spec;
    bool ok = true;
    if (dist->parsed()) {
      command = "distribution";
      spec = resolve_spec(o, {"1,2,5,6", {std::sqrt(10.0)}, "analytic"});
      write_distribution(spec, cfg, body);
    } else if (mom->parsed()) {
      command = "moments";
      spec = resolve_spec(o, {"1-10", fig_alphas, "all"});
      write_moments(spec, cfg, body);
    } else if (unc->parsed()) {
      command = "uncertainty";
      spec = resolve_spec(o, {"1-10", fig_alphas, "analytic"});
      ok = write_uncertainty(spec, cfg, body);
    } else {
      command = "critical-alpha";
      spec = resolve_spec(o, {"2-10", {1.0}, "analytic"});
      write_critical_alpha(spec, cfg, body);
    }
    write_output(o.out, body.str());
    if (!o.out.empty()) write_output(o.out + ".meta.json", sidecar(command, spec, cfg));
    if (!ok) {
      std::cerr << "error: Robertson margin below -1e-10 on some row\n";
      return kVerificationFailure;
    }
    return kSuccess;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericFailure;
  }
}

}  // namespace parabose::cli
