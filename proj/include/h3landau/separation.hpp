// Reduction constants of the separated Dirac system: the axial momentum p,
// the two self-consistency roots A, the effective radial potential mu(r),
// and the branch structure relating the two 2x2 subsystems.

#ifndef H3LANDAU_SEPARATION_HPP_
#define H3LANDAU_SEPARATION_HPP_

#include "h3landau/errors.hpp"
#include "h3landau/halfint.hpp"

namespace h3landau {

struct PhysicalParams {
  double B;        // field strength, curvature units, > 0
  double M;        // mass, > 0
  double epsilon;  // energy; |epsilon| >= M needed for real axial motion

  static PhysicalParams make(double B, double M, double epsilon);
};

struct SeparationConstants {
  double p;        // +sqrt(epsilon^2 - M^2)
  double A_plus;   // (epsilon + p)/M
  double A_minus;  // (epsilon - p)/M; A_plus * A_minus = 1
  double lambda;   // separating constant, nonzero
};

enum class Branch { plus, minus };

// Throws "subluminal energy" when |epsilon| < M and "degenerate separation"
// when lambda = 0 (the second components are reconstructed by dividing by it).
SeparationConstants separation_constants(const PhysicalParams& params, double lambda);

// Effective radial potential [m - B(cosh r - 1)] / sinh r.  The real-m
// overload is the raw formula; quantum states use the half-integer form.
double mu(double r, double m, double B);
double mu(double r, HalfInteger m, double B);

// d(mu)/dr, used by the equation-form cross-checks.
double mu_derivative(double r, double m, double B);

// The product A*M for the chosen branch: epsilon + p or epsilon - p.
double branch_sign_to_AM(Branch branch, const PhysicalParams& params);

// Signed axial momentum carried by the branch: +p or -p.
double branch_momentum(Branch branch, const PhysicalParams& params);

}  // namespace h3landau

#endif  // H3LANDAU_SEPARATION_HPP_
