#include "h3landau/geometry.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace h3landau {

CylindricalPoint CylindricalPoint::make(double t, double r, double phi, double z) {
  if (!(r >= 0.0))
    throw Error(errc::bad_argument, "radial coordinate must satisfy r >= 0, got " +
                                        std::to_string(r));
  constexpr double two_pi = 6.283185307179586476925286766559;
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  return CylindricalPoint{t, r, phi, z};
}

EmbeddingVector embed(const CylindricalPoint& p) {
  double chz = std::cosh(p.z), shz = std::sinh(p.z);
  double chr = std::cosh(p.r), shr = std::sinh(p.r);
  return {chz * chr, chz * shr * std::cos(p.phi), chz * shr * std::sin(p.phi), shz};
}

MetricComponents metric_at(const CylindricalPoint& p) {
  double ch2 = std::cosh(p.z) * std::cosh(p.z);
  double shr = std::sinh(p.r);
  return {1.0, -ch2, -ch2 * shr * shr, -1.0};
}

TetradDiagonal tetrad_at(const CylindricalPoint& p) {
  if (p.r <= 0.0)
    throw Error(errc::axis_degeneracy, "tetrad phi leg needs 1/sinh r; r = " +
                                           std::to_string(p.r));
  double chz = std::cosh(p.z);
  return {1.0, 1.0 / chz, 1.0 / (chz * std::sinh(p.r)), 1.0};
}

ConnectionData christoffel_at(const CylindricalPoint& p) {
  if (p.r <= 0.0)
    throw Error(errc::axis_degeneracy, "connection has coth r entries; r = " +
                                           std::to_string(p.r));
  double thz = std::tanh(p.z);
  double chz = std::cosh(p.z), shz = std::sinh(p.z);
  double chr = std::cosh(p.r), shr = std::sinh(p.r);

  ConnectionData out;
  std::memset(out.christoffel, 0, sizeof out.christoffel);
  // Indices: t=0, r=1, phi=2, z=3.
  out.christoffel[1][1][3] = out.christoffel[1][3][1] = thz;
  out.christoffel[1][2][2] = -shr * chr;
  out.christoffel[2][1][2] = out.christoffel[2][2][1] = chr / shr;
  out.christoffel[2][2][3] = out.christoffel[2][3][2] = thz;
  out.christoffel[3][1][1] = -chz * shz;
  out.christoffel[3][2][2] = -shz * chz * shr * shr;
  out.ricci_rotation = {1.0 / (chz * (shr / chr)), thz, thz};
  return out;
}

double vector_potential(const CylindricalPoint& p, double B) {
  // -2B sinh^2(r/2), the cancellation-free form of -B(cosh r - 1).
  double s = std::sinh(0.5 * p.r);
  return -2.0 * B * s * s;
}

}  // namespace h3landau
