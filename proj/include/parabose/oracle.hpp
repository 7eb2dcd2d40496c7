#pragma once

// Brute-force reference: dense matrices of the para-Bose algebra on the first
// N Fock states and direct construction of exp(alpha A^+ - alpha^* A)|p; 0>.
// Nothing here uses the closed forms.

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "parabose/report.hpp"
#include "parabose/types.hpp"

namespace parabose::oracle {

struct TruncatedOperators {
  ParaBoseOrder order;
  int dim = 0;
  Eigen::MatrixXd a_lower;    ///< A
  Eigen::MatrixXd a_raise;    ///< A^+ (transpose of A)
  Eigen::MatrixXd number_op;  ///< n, diagonal
  Eigen::MatrixXd parity;     ///< Pi = exp(i pi n), diagonal +-1
};

/// Ladder matrices from the commutator recursion
///   |<n|A|n+1>|^2 - |<n-1|A|n>|^2 = 1 + (p - 1)(-1)^n,  A|0> = 0.
TruncatedOperators build_operators(ParaBoseOrder p, int dim);

/// Max-abs deviations of the four defining relations on the truncated space.
/// The [A, A^+] and {A, A^+} checks skip the last row/column, which the
/// truncation corrupts.
struct AlgebraDeviation {
  double commutator = 0.0;       ///< [A, A^+] - 1 - (p-1) Pi
  double anticommutator = 0.0;   ///< {A, A^+} - 2n - p
  double number_raise = 0.0;     ///< [n, A^+] - A^+
  double number_lower = 0.0;     ///< [n, A] + A

  double max() const;
};

AlgebraDeviation algebra_deviation(const TruncatedOperators& ops);

struct DisplacedState {
  Eigen::VectorXcd vector;
  /// | ||v|| - 1 |
  double norm_deviation = 0.0;
  /// Probability in the top two levels of the truncated space.
  double edge_mass = 0.0;
  std::vector<std::string> diagnostics;
};

/// exp(alpha A^+ - alpha^* A) applied to `state`, by Taylor series on
/// sub-steps of the generator. Throws TruncationTooSmall when the result
/// leaks to the top of the truncated space.
DisplacedState displace(const TruncatedOperators& ops, Complex alpha, const Eigen::VectorXcd& state);

DisplacedState displace_vacuum(const TruncatedOperators& ops, Complex alpha);

/// Expectation values as vector-matrix-vector products; second moments are
/// evaluated with the state padded by two levels so X^2, Y^2 see an unclipped
/// operator.
MomentReport oracle_moments(const TruncatedOperators& ops, const Eigen::VectorXcd& state);

/// Convenience: build operators with `dim` levels (default
/// truncation_rule(p, alpha)), displace the vacuum and report its moments.
MomentReport oracle_report(ParaBoseOrder p, Complex alpha, std::optional<int> dim = {});

}  // namespace parabose::oracle
