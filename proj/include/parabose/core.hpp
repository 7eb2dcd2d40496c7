#pragma once

// Displaced para-Bose vacua |p; alpha> = exp(alpha A^+ - alpha^* A)|p; 0>:
// Fock amplitudes, occupation probabilities, overlaps, and the numerical
// check that the family resolves the identity.

#include <optional>
#include <vector>

#include "parabose/specfun.hpp"
#include "parabose/types.hpp"

namespace parabose::core {

/// Truncated Fock decomposition c_n = <p; n | p; alpha>, n < truncation.
struct FockAmplitudes {
  ParaBoseOrder order;
  Complex alpha;
  std::vector<Complex> amplitudes;
  int truncation = 0;
  /// |1 - sum |c_n|^2| plus a rounding allowance; always computed.
  double tail_bound = 0.0;
};

/// <p; n-1 | A | p; n>: sqrt(n) for even n, sqrt(n - 1 + p) for odd n.
double ladder_coefficient(ParaBoseOrder p, int n);

/// Single Fock amplitude, assembled in log space.
Complex fock_amplitude(ParaBoseOrder p, Complex alpha, int n);

/// Amplitudes for n < truncation (default: truncation_rule(p, alpha)).
FockAmplitudes fock_amplitudes(ParaBoseOrder p, Complex alpha, std::optional<int> truncation = {});

/// P(n) = |<p; n | p; alpha>|^2 from its own closed form (even/odd branches).
double occupation_probability(ParaBoseOrder p, Complex alpha, int n);

/// <p; alpha | p; beta> from the hypergeometric-product series.
Complex overlap(ParaBoseOrder p, Complex alpha, Complex beta);

enum class Parity { even, odd };

/// Closed-form right-hand side of the radial identity-resolution integral.
double identity_integral_closed_form(ParaBoseOrder p, int j, Parity parity);

/// Numerical value of the radial integral divided by its closed form.
double identity_integral_ratio(ParaBoseOrder p, int j, Parity parity);

/// (numeric - closed) / closed for the radial identity-resolution integral.
double identity_resolution_residual(ParaBoseOrder p, int j, Parity parity);

}  // namespace parabose::core
