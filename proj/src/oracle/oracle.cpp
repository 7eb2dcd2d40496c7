#include <algorithm>
#include <cmath>
#include <string>

#include "parabose/errors.hpp"
#include "parabose/oracle.hpp"

namespace parabose::oracle {

namespace {

constexpr double kNormTolerance = 1e-8;
constexpr double kEdgeTolerance = 1e-8;
constexpr double kTaylorStop = 1e-16;
constexpr int kTaylorCap = 500;

// <n-1|A|n> read back from the matrix, index n = 1..dim-1 (entry 0 unused).
std::vector<double> superdiagonal(const TruncatedOperators& ops) {
  std::vector<double> c(ops.dim + 1, 0.0);
  for (int n = 1; n < ops.dim; ++n) c[n] = ops.a_lower(n - 1, n);
  return c;
}

// G v with G = alpha A^+ - alpha^* A, using the bandwidth-1 structure.
void apply_generator(const std::vector<double>& c, Complex alpha, const Eigen::VectorXcd& v, Eigen::VectorXcd& out) {
  const int dim = static_cast<int>(v.size());
  const Complex ac = std::conj(alpha);
  for (int n = 0; n < dim; ++n) {
    Complex s(0.0, 0.0);
    if (n >= 1) s += alpha * c[n] * v[n - 1];
    if (n + 1 < dim) s -= ac * c[n + 1] * v[n + 1];
    out[n] = s;
  }
}

void check_norm(const Eigen::VectorXcd& v, const char* what) {
  const double dev = std::fabs(v.norm() - 1.0);
  if (dev > kNormTolerance) {
    throw NumericError(ErrorCode::TruncationTooSmall,
                       std::string(what) + ": state norm deviates from 1 by " + std::to_string(dev));
  }
}

}  // namespace

TruncatedOperators build_operators(ParaBoseOrder p, int dim) {
  if (dim < 2) throw NumericError(ErrorCode::InvalidParameter, "truncated space needs dim >= 2");
  TruncatedOperators ops{p, dim, Eigen::MatrixXd::Zero(dim, dim), Eigen::MatrixXd::Zero(dim, dim),
                         Eigen::MatrixXd::Zero(dim, dim), Eigen::MatrixXd::Zero(dim, dim)};
  // Diagonal of [A, A^+] on |n> gives a_{n+1}^2 - a_n^2 = 1 + (p-1)(-1)^n,
  // and A|0> = 0 fixes a_0 = 0.
  double a2 = 0.0;
  for (int n = 0; n + 1 < dim; ++n) {
    a2 += 1.0 + (p.as_double() - 1.0) * (n % 2 == 0 ? 1.0 : -1.0);
    ops.a_lower(n, n + 1) = std::sqrt(a2);
  }
  ops.a_raise = ops.a_lower.transpose();
  for (int n = 0; n < dim; ++n) {
    ops.number_op(n, n) = n;
    ops.parity(n, n) = n % 2 == 0 ? 1.0 : -1.0;
  }
  return ops;
}

double AlgebraDeviation::max() const {
  return std::max({commutator, anticommutator, number_raise, number_lower});
}

AlgebraDeviation algebra_deviation(const TruncatedOperators& ops) {
  const auto& a = ops.a_lower;
  const auto& ad = ops.a_raise;
  const auto& n = ops.number_op;
  const int inner = ops.dim - 1;
  const double pm1 = ops.order.as_double() - 1.0;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(ops.dim, ops.dim);

  const Eigen::MatrixXd comm = a * ad - ad * a - id - pm1 * ops.parity;
  const Eigen::MatrixXd anti = a * ad + ad * a - 2.0 * n - ops.order.as_double() * id;

  AlgebraDeviation d;
  d.commutator = comm.topLeftCorner(inner, inner).cwiseAbs().maxCoeff();
  d.anticommutator = anti.topLeftCorner(inner, inner).cwiseAbs().maxCoeff();
  d.number_raise = (n * ad - ad * n - ad).cwiseAbs().maxCoeff();
  d.number_lower = (n * a - a * n + a).cwiseAbs().maxCoeff();
  return d;
}

DisplacedState displace(const TruncatedOperators& ops, Complex alpha, const Eigen::VectorXcd& state) {
  if (state.size() != ops.dim) {
    throw NumericError(ErrorCode::InvalidParameter, "state dimension does not match the operators");
  }
  DisplacedState out;
  if (ops.dim < truncation_rule(ops.order, alpha)) {
    out.diagnostics.push_back("warning: dim " + std::to_string(ops.dim) + " is below the truncation rule " +
                              std::to_string(truncation_rule(ops.order, alpha)));
  }

  const std::vector<double> c = superdiagonal(ops);
  // exp(G) = exp(G/s)^s with ||G/s||_1 <= 1 keeps every Taylor sum free of
  // the e^{||G||} growth a single series would have to cancel.
  const double cmax = *std::max_element(c.begin(), c.end());
  const int steps = std::max(1, static_cast<int>(std::ceil(2.0 * std::abs(alpha) * cmax)));
  const Complex step_alpha = alpha / static_cast<double>(steps);

  Eigen::VectorXcd v = state;
  Eigen::VectorXcd term(ops.dim);
  Eigen::VectorXcd next(ops.dim);
  for (int s = 0; s < steps; ++s) {
    Eigen::VectorXcd sum = v;
    term = v;
    int k = 1;
    for (; k <= kTaylorCap; ++k) {
      apply_generator(c, step_alpha, term, next);
      term = next / static_cast<double>(k);
      sum += term;
      if (term.norm() <= kTaylorStop * sum.norm()) break;
    }
    if (k > kTaylorCap) throw NumericError(ErrorCode::NonConvergence, "Taylor series of the displacement stalled");
    v = sum;
  }

  out.norm_deviation = std::fabs(v.norm() - 1.0);
  out.edge_mass = std::norm(v[ops.dim - 1]) + std::norm(v[ops.dim - 2]);
  if (out.norm_deviation > kNormTolerance) {
    throw NumericError(ErrorCode::TruncationTooSmall,
                       "displaced state norm deviates from 1 by " + std::to_string(out.norm_deviation));
  }
  if (out.edge_mass > kEdgeTolerance) {
    throw NumericError(ErrorCode::TruncationTooSmall,
                       "displaced state has mass " + std::to_string(out.edge_mass) + " in the top two of " +
                           std::to_string(ops.dim) + " levels");
  }
  out.vector = std::move(v);
  return out;
}

DisplacedState displace_vacuum(const TruncatedOperators& ops, Complex alpha) {
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(ops.dim);
  e0[0] = 1.0;
  return displace(ops, alpha, e0);
}

MomentReport oracle_moments(const TruncatedOperators& ops, const Eigen::VectorXcd& state) {
  if (state.size() != ops.dim) {
    throw NumericError(ErrorCode::InvalidParameter, "state dimension does not match the operators");
  }
  check_norm(state, "oracle_moments");

  const int dim = ops.dim + 2;
  const TruncatedOperators big = build_operators(ops.order, dim);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v.head(ops.dim) = state;

  const Complex i(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Eigen::MatrixXcd a = big.a_lower.cast<Complex>();
  const Eigen::MatrixXcd ad = big.a_raise.cast<Complex>();
  const Eigen::MatrixXcd x = (ad + a) * inv_sqrt2;
  const Eigen::MatrixXcd y = i * (ad - a) * inv_sqrt2;

  const Eigen::VectorXcd nv = big.number_op.cast<Complex>() * v;
  const Eigen::VectorXcd xv = x * v;
  const Eigen::VectorXcd yv = y * v;
  const double parity = v.dot(big.parity.cast<Complex>() * v).real();

  MomentReport rep;
  rep.method = Method::oracle;
  rep.mean_n = v.dot(nv).real();
  rep.var_n = nv.squaredNorm() - rep.mean_n * rep.mean_n;
  if (rep.mean_n > 0.0) rep.mandel_q = (rep.var_n - rep.mean_n) / rep.mean_n;
  rep.mean_x = v.dot(xv).real();
  rep.mean_y = v.dot(yv).real();
  rep.var_x = xv.squaredNorm() - rep.mean_x * rep.mean_x;
  rep.var_y = yv.squaredNorm() - rep.mean_y * rep.mean_y;
  rep.uncertainty_product = std::sqrt(rep.var_x * rep.var_y);
  rep.robertson_bound = 0.5 * std::fabs(1.0 + (ops.order.as_double() - 1.0) * parity);
  return rep;
}

MomentReport oracle_report(ParaBoseOrder p, Complex alpha, std::optional<int> dim) {
  const TruncatedOperators ops = build_operators(p, dim.value_or(truncation_rule(p, alpha)));
  return oracle_moments(ops, displace_vacuum(ops, alpha).vector);
}

}  // namespace parabose::oracle
