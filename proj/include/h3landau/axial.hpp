// Closed-form solutions Z1, Z2 of the axial second-order equation in the
// four substitution variants, plus the asymptotic classification of each
// variant's behavior at z -> ±infinity.

#ifndef H3LANDAU_AXIAL_HPP_
#define H3LANDAU_AXIAL_HPP_

#include <complex>

#include "h3landau/special_functions.hpp"

namespace h3landau {

struct AxialSpec {
  int variant;                  // 1..4
  std::complex<double> A_exp;   // exponent of e^z/cosh z
  std::complex<double> B_exp;   // exponent of e^{-z}/cosh z
  HypergeoArgs hyper;           // alpha, beta, gamma template (x unused)
  double p;                     // signed axial momentum
  double lambda;                // separating constant, nonzero
};

// Substitution exponents per variant:
//   1: A = (1+ip)/2, B = (1-ip)/2     3: A = (1+ip)/2, B = ip/2
//   2: A = -ip/2,    B = ip/2         4: A = -ip/2,    B = (1-ip)/2
// with alpha = i*lambda + A + B, beta = -i*lambda + A + B, gamma = 2A + 1/2.
// Throws "degenerate separation" for lambda = 0.
AxialSpec axial_spec(int variant, double p, double lambda);

// Z1(z) = (e^z/cosh z)^A (e^{-z}/cosh z)^B F(alpha, beta, gamma; e^z/(2 cosh z)).
std::complex<double> eval_Z1(const AxialSpec& spec, double z);

// dZ1/dz, analytic: product rule on the prefactor plus the parameter-shifted
// hypergeometric derivative.
std::complex<double> eval_Z1_prime(const AxialSpec& spec, double z);

// Z2(z) = cosh z * (Z1'(z) + ip Z1(z)) / lambda.
std::complex<double> eval_Z2(const AxialSpec& spec, double z);

struct AsymptoticClass {
  bool decays;             // |Z1| -> 0 exponentially in the leading channel
  int wave_sign;           // plane-wave ends: Z1 ~ e^{i * wave_sign * p * z}; 0 if decaying
  bool derived_not_quoted; // classification computed from the exponents alone
};

// Classification of the leading substitution-exponent channel at
// direction = +1 (z -> +inf) or -1 (z -> -inf).  Note: at ends where the
// prefactor decays but the hypergeometric argument approaches 1, the series
// factor can still contribute a bounded oscillating tail; see the solver
// tests for the measured magnitudes.
AsymptoticClass axial_asymptote(int variant, int direction);

// The hypergeometric argument e^z/(2 cosh z) = (1 + tanh z)/2, in (0, 1).
double axial_argument(double z);

}  // namespace h3landau

#endif  // H3LANDAU_AXIAL_HPP_
