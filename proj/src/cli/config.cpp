#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "parabose/cli.hpp"

namespace parabose::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

template <typename T>
bool parse_number(const std::string& s, T& out) {
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

double parse_real(const std::string& token) {
  double v = 0.0;
  if (token.rfind("sqrt(", 0) == 0 && token.size() > 6 && token.back() == ')') {
    const std::string inner = token.substr(5, token.size() - 6);
    if (parse_number(inner, v) && v >= 0.0) return std::sqrt(v);
  } else if (parse_number(token, v) && std::isfinite(v)) {
    return v;
  }
  throw UsageError("not a real number: '" + token + "'");
}

}  // namespace

Config parse_config(std::istream& in, const std::string& source, Config base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = source + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw UsageError(where + ": expected key = value");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key == "tolerance") {
      double t = 0.0;
      if (!parse_number(value, t) || !(t > 0.0 && t < 1.0)) throw UsageError(where + ": tolerance must be in (0, 1)");
      base.tolerance = t;
    } else if (key == "truncation") {
      int n = 0;
      if (!parse_number(value, n) || n < 2) throw UsageError(where + ": truncation must be an integer >= 2");
      base.truncation = n;
    } else if (key == "threads") {
      unsigned n = 0;
      if (!parse_number(value, n)) throw UsageError(where + ": threads must be a nonnegative integer");
      base.threads = n;
    } else {
      throw UsageError(where + ": unknown key '" + key + "'");
    }
  }
  return base;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  return parse_config(in, path, base);
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : split(text, ',')) {
    const auto dash = item.find('-', 1);
    int lo = 0;
    int hi = 0;
    const bool ok = dash == std::string::npos
                        ? parse_number(item, lo) && (hi = lo, true)
                        : parse_number(trim(item.substr(0, dash)), lo) && parse_number(trim(item.substr(dash + 1)), hi);
    if (!ok || lo < 1 || hi < lo) throw UsageError("bad order list entry '" + item + "'");
    for (int p = lo; p <= hi; ++p) out.push_back(p);
  }
  if (out.empty()) throw UsageError("empty order list");
  return out;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

std::vector<Complex> alphas_from_polar(const std::vector<double>& moduli, const std::vector<double>& phases) {
  std::vector<Complex> out;
  for (double m : moduli) {
    if (m < 0.0) throw UsageError("alpha modulus must be >= 0");
    for (double ph : phases) out.push_back(ph == 0.0 ? Complex(m, 0.0) : std::polar(m, ph));
  }
  return out;
}

std::vector<Complex> alphas_from_cartesian(const std::vector<double>& re, const std::vector<double>& im) {
  if (re.size() != im.size() && re.size() != 1 && im.size() != 1) {
    throw UsageError("--alpha-re and --alpha-im lists must have equal length (or one of length 1)");
  }
  const std::size_t n = std::max(re.size(), im.size());
  std::vector<Complex> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(re[re.size() == 1 ? 0 : i], im[im.size() == 1 ? 0 : i]);
  }
  return out;
}

}  // namespace parabose::cli
