#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "parabose/errors.hpp"

namespace parabose {

using Complex = std::complex<double>;

/// Order p of the para-Bose algebra; p = 1 is the ordinary boson.
class ParaBoseOrder {
 public:
  explicit ParaBoseOrder(int p) : p_(p) {
    if (p < 1) {
      throw NumericError(ErrorCode::InvalidParameter,
                         "para-Bose order must be >= 1, got " + std::to_string(p));
    }
  }

  int value() const noexcept { return p_; }
  double as_double() const noexcept { return static_cast<double>(p_); }
  bool is_boson() const noexcept { return p_ == 1; }

  friend bool operator==(ParaBoseOrder, ParaBoseOrder) = default;
  friend auto operator<=>(ParaBoseOrder, ParaBoseOrder) = default;

 private:
  int p_;
};

/// A displaced para-Bose vacuum |p; alpha>.
struct ParaBoseState {
  ParaBoseOrder order;
  Complex alpha;

  double modulus() const { return std::abs(alpha); }
};

/// Fock dimension that keeps the neglected probability mass negligible:
/// N = ceil(|alpha|^2 + 10|alpha| + p + 20).
inline int truncation_rule(ParaBoseOrder p, Complex alpha) {
  const double r = std::abs(alpha);
  return static_cast<int>(std::ceil(r * r + 10.0 * r + p.as_double() + 20.0));
}

}  // namespace parabose
