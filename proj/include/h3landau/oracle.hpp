// Implementation-independent verification machinery: finite-difference
// residuals of the second-order equations and first-order systems, the full
// coupled four-component check, and a shooting/bisection eigenvalue solver
// that rediscovers the quantized spectrum without the closed forms.  Every
// operation consumes plain callables, never solver internals.

#ifndef H3LANDAU_ORACLE_HPP_
#define H3LANDAU_ORACLE_HPP_

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "h3landau/errors.hpp"
#include "h3landau/geometry.hpp"
#include "h3landau/halfint.hpp"

namespace h3landau {

using ComplexFn = std::function<std::complex<double>(double)>;
using RealFn = std::function<double(double)>;
using ComplexFn2 = std::function<std::complex<double>(double, double)>;

struct Grid1D {
  double lo = 0.0;
  double hi = 1.0;
  int count = 16;

  double step() const { return (hi - lo) / (count - 1); }
  double node(int i) const { return lo + step() * i; }

  // Validates count >= 16 and hi > lo.
  static Grid1D make(double lo, double hi, int count);
};

struct ResidualOptions {
  double fd_step = 1e-4;  // step of the 4th-order stencils around each node
};

struct ResidualReport {
  double max_abs = 0.0;
  double argmax_location = 0.0;    // grid coordinate of the worst defect
  double argmax_location_z = 0.0;  // second coordinate for the 2-D system
  Grid1D grid;
  std::vector<double> per_relation;  // per-equation maxima where applicable
};

// Geometry self-consistency defects, all independent of the closed-form
// connection table:
//   hyperboloid: |u.u - 1| of the embedding under the (+,-,-,-) product;
//   tetrad:      max |e_(a) e_(b) g - eta_ab| over frame index pairs;
//   christoffel: max |closed form - central-difference metric derivative|
//                over all index triples, with differencing step h.
double geometry_defect_hyperboloid(const CylindricalPoint& point);
double geometry_defect_tetrad(const CylindricalPoint& point);
double geometry_defect_christoffel(const CylindricalPoint& point, double h);

// Pointwise equation defects (4th-order central stencils of width 2h):
// exposed so tests can probe specific locations.
std::complex<double> axial_ode_defect(const ComplexFn& Z1, double p, double lambda,
                                      double z, double h);
double radial_ode_defect(const RealFn& R1, double m, double B, double lambda_sq,
                         double r, double h);

// The radial bracket in its two printed forms; they agree identically.
double radial_bracket(double r, double m, double B, double lambda_sq);
double radial_bracket_mu_form(double r, double m, double B, double lambda_sq);

// Z1'' + tanh z Z1' + (p^2 + ip tanh z - lambda^2/cosh^2 z) Z1 over the grid.
ResidualReport residual_axial_ode(const ComplexFn& Z1, double p, double lambda,
                                  const Grid1D& grid, const ResidualOptions& opt = {});

// R1'' + [(m cosh r + B(cosh r - 1))/sinh^2 r
//         - (m - B(cosh r - 1))^2/sinh^2 r + lambda^2] R1 over the grid.
ResidualReport residual_radial_ode(const RealFn& R1, HalfInteger m, double B,
                                   double lambda_sq, const Grid1D& grid,
                                   const ResidualOptions& opt = {});

struct AxialRelation {
  double p;
  double lambda;
};

struct RadialRelation {
  HalfInteger m;
  double B;
  double lambda;
};

// Both first-order relations of the axial pair:
//   cosh z (Z1' + ip Z1) - lambda Z2  and  cosh z (Z2' - ip Z2) - lambda Z1.
ResidualReport residual_first_order(const ComplexFn& Z1, const ComplexFn& Z2,
                                    const AxialRelation& rel, const Grid1D& grid,
                                    const ResidualOptions& opt = {});

// Both first-order relations of the radial pair:
//   (d/dr + mu) R2 + lambda R1  and  (d/dr - mu) R1 - lambda R2.
ResidualReport residual_first_order(const RealFn& R1, const RealFn& R2,
                                    const RadialRelation& rel, const Grid1D& grid,
                                    const ResidualOptions& opt = {});

// The four coupled first-order equations for f = (f1, f2, f3, f4)(r, z):
//   (d/dr + mu) f4 + cosh z d/dz f3 + i cosh z (eps f3 - M f1)
//   (d/dr - mu) f3 - cosh z d/dz f4 + i cosh z (eps f4 - M f2)
//   (d/dr + mu) f2 + cosh z d/dz f1 - i cosh z (eps f1 - M f3)
//   (d/dr - mu) f1 - cosh z d/dz f2 - i cosh z (eps f2 - M f4)
// evaluated over the tensor grid; per_relation holds the four maxima.
ResidualReport residual_dirac_system(const std::array<ComplexFn2, 4>& f, double epsilon,
                                     double M, HalfInteger m, double B,
                                     const Grid1D& r_grid, const Grid1D& z_grid,
                                     const ResidualOptions& opt = {});

struct ShootOptions {
  double scan_step = 0.0;    // 0: use min(0.25, B/20)
  double bisect_tol = 1e-9;  // absolute tolerance on lambda^2
};

// Integrates u'' = (mu' + mu^2 - lambda^2) u outward from a series start
// at grid.lo (indicial exponent from m: m/2 for m > 0, (1-m)/2 otherwise),
// scans lambda^2 for sign changes of u(grid.hi), and
// bisects each bracket.  Returns all eigenvalues below the ceiling; an
// empty list is a valid result.  Requires grid.lo in (0, 0.05] and
// grid.hi >= 12; grid.count is the number of integration nodes.
std::vector<double> shoot_radial_eigenvalues(double B, HalfInteger m,
                                             double lambda_sq_ceiling, const Grid1D& grid,
                                             const ShootOptions& opt = {});

}  // namespace h3landau

#endif  // H3LANDAU_ORACLE_HPP_
