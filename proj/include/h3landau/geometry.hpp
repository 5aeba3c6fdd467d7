// Cylindrical coordinates on the unit-curvature hyperbolic space H3:
// embedding into the ambient hyperboloid, diagonal metric and tetrad,
// connection coefficients, and the azimuthal magnetic potential.

#ifndef H3LANDAU_GEOMETRY_HPP_
#define H3LANDAU_GEOMETRY_HPP_

#include "h3landau/errors.hpp"

namespace h3landau {

struct CylindricalPoint {
  double t = 0.0;
  double r = 0.0;    // >= 0
  double phi = 0.0;  // reduced to [0, 2*pi)
  double z = 0.0;

  // Validates r >= 0 and reduces phi modulo 2*pi.
  static CylindricalPoint make(double t, double r, double phi, double z);
};

struct EmbeddingVector {
  double u0, u1, u2, u3;  // u0^2 - u1^2 - u2^2 - u3^2 = 1, u0 >= 1
};

struct MetricComponents {
  double g_tt, g_rr, g_phiphi, g_zz;  // diagonal, signature (+,-,-,-)
};

struct TetradDiagonal {
  double e_t, e_r, e_phi, e_z;  // diagonal legs e_(a)^mu
};

struct RicciRotation {
  double gamma_122;  // 1/(cosh z * tanh r)
  double gamma_311;  // tanh z
  double gamma_322;  // tanh z
};

// Coordinate index order is (t, r, phi, z) = (0, 1, 2, 3); the Christoffel
// array is indexed [upper][lower][lower] and symmetric in the lower pair.
struct ConnectionData {
  double christoffel[4][4][4];
  RicciRotation ricci_rotation;
};

EmbeddingVector embed(const CylindricalPoint& point);

MetricComponents metric_at(const CylindricalPoint& point);

// Throws "axis degeneracy" at r = 0 where the phi leg needs 1/sinh r.
TetradDiagonal tetrad_at(const CylindricalPoint& point);

// Throws "axis degeneracy" at r = 0 (coth r entries).
ConnectionData christoffel_at(const CylindricalPoint& point);

// Azimuthal potential -B(cosh r - 1); vanishes on the axis.
double vector_potential(const CylindricalPoint& point, double B);

}  // namespace h3landau

#endif  // H3LANDAU_GEOMETRY_HPP_
