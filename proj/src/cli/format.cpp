#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <thread>

#include "parabose/cli.hpp"

namespace parabose::cli {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double max_discrepancy(const MomentReport& a, const MomentReport& b) {
  double worst = 0.0;
  auto cmp = [&](double x, double ref) { worst = std::max(worst, std::fabs(x - ref) / std::max(std::fabs(ref), 1e-2)); };
  cmp(a.mean_n, b.mean_n);
  cmp(a.var_n, b.var_n);
  if (a.mandel_q && b.mandel_q) {
    cmp(*a.mandel_q, *b.mandel_q);
  } else if (a.mandel_q.has_value() != b.mandel_q.has_value()) {
    worst = std::numeric_limits<double>::infinity();
  }
  cmp(a.mean_x, b.mean_x);
  cmp(a.mean_y, b.mean_y);
  cmp(a.var_x, b.var_x);
  cmp(a.var_y, b.var_y);
  cmp(a.uncertainty_product, b.uncertainty_product);
  cmp(a.robertson_bound, b.robertson_bound);
  return worst;
}

}  // namespace parabose::cli
