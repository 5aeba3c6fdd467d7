// Closed-form radial solutions R1, R2 in the two admissible substitution
// variants, the per-variant admissibility conditions, and the quantization
// rules for the separating constant.

#ifndef H3LANDAU_RADIAL_HPP_
#define H3LANDAU_RADIAL_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h3landau/halfint.hpp"
#include "h3landau/special_functions.hpp"

namespace h3landau {

struct RadialSpec {
  int variant;        // 3 or 4
  double A_exp;       // -B - m/2 (both variants)
  double C_exp;       // m/2 (variant 3) or (1-m)/2 (variant 4)
  HypergeoArgs hyper; // real alpha, beta, gamma in the bound-state case
  HalfInteger m;
  double B;
  double lambda_sq;
};

// Builds the exponents and hypergeometric parameters:
//   variant 3: alpha, beta = -B ± sqrt(B^2 - lambda^2)
//   variant 4: alpha, beta = (-B - m + 1/2) ± sqrt(B^2 - lambda^2)
//   gamma = -2B - m + 1/2 for both.
// Throws "inadmissible m" outside the variant's range (3: m > 0;
// 4: -2B < m <= 1) and "complex root" when lambda_sq > B^2.
RadialSpec radial_spec(int variant, HalfInteger m, double B, double lambda_sq);

// lambda^2 = 2Bn - n^2 (variant 3) or 2Bk - k^2 with k = n - m + 1/2
// (variant 4).  Throws "level outside well" when the confinement inequality
// B - n > 0 (variant 3) or B + m - 1/2 - n > 0 (variant 4) fails; the raw
// formula value is returned otherwise, including the n = 0 boundary.
double quantized_lambda_sq(int variant, double B, HalfInteger m, int n);

// All (n, lambda_sq) pairs under the confinement inequality.  n starts at 1
// for variant 3 and at the smallest n with n - m + 1/2 > 0 for variant 4;
// the lambda = 0 boundary state is excluded because the first-order
// reconstruction of the second components divides by lambda.
std::vector<std::pair<int, double>> allowed_levels(int variant, double B, HalfInteger m);

// R1(r) = (1 + cosh r)^A (cosh r - 1)^C F(alpha, beta, gamma; (1+cosh r)/2),
// terminating at degree n (alpha = -n).  The (1 - cosh r)^C form differs by
// a constant unimodular phase, dropped since the linear equation and all
// residual checks are insensitive to constant factors.  Returns 0 at r = 0
// (C_exp > 0 for every half-integer m).  Throws "non-terminating" when the
// spec's alpha is not the negative integer -n.
double eval_R1(const RadialSpec& spec, int n, double r);

// dR1/dr, analytic (prefactor product rule + polynomial derivative).
double eval_R1_prime(const RadialSpec& spec, int n, double r);

// R2 = (R1' - mu R1)/lambda; throws "degenerate separation" for lambda = 0.
double eval_R2(const RadialSpec& spec, int n, double lambda, double r);

// Why a substitution variant is rejected, or nullopt when admissible.  The
// discarded variants 1 and 2 (exponent choices A = (2B+m+1)/2 with C = m/2
// or (1-m)/2) always violate one of C >= 0, A < 0, C + A < 0.
std::optional<std::string> radial_variant_rejection(int variant, HalfInteger m, double B);

// Distance to the confinement boundary: B - n or B + m - 1/2 - n.
double constraint_margin(int variant, double B, HalfInteger m, int n);

}  // namespace h3landau

#endif  // H3LANDAU_RADIAL_HPP_
