#include "h3landau/separation.hpp"

#include <cmath>
#include <string>

namespace h3landau {

PhysicalParams PhysicalParams::make(double B, double M, double epsilon) {
  if (!(B > 0.0))
    throw Error(errc::bad_argument, "field strength must be positive, got B = " +
                                        std::to_string(B));
  if (!(M > 0.0))
    throw Error(errc::bad_argument, "mass must be positive, got M = " + std::to_string(M));
  return PhysicalParams{B, M, epsilon};
}

namespace {

double axial_momentum(const PhysicalParams& params) {
  if (std::fabs(params.epsilon) < params.M)
    throw Error(errc::subluminal_energy,
                "|epsilon| = " + std::to_string(std::fabs(params.epsilon)) +
                    " < M = " + std::to_string(params.M) + ", no real axial momentum");
  return std::sqrt((params.epsilon - params.M) * (params.epsilon + params.M));
}

}  // namespace

SeparationConstants separation_constants(const PhysicalParams& params, double lambda) {
  if (lambda == 0.0)
    throw Error(errc::degenerate_separation,
                "lambda = 0 breaks the second-component reconstruction");
  double p = axial_momentum(params);
  return {p, (params.epsilon + p) / params.M, (params.epsilon - p) / params.M, lambda};
}

double mu(double r, double m, double B) {
  if (!(r > 0.0))
    throw Error(errc::axis_degeneracy, "mu(r) has a 1/sinh r pole; r = " + std::to_string(r));
  double shr = std::sinh(r);
  double s = std::sinh(0.5 * r);
  return (m - 2.0 * B * s * s) / shr;  // 2 sinh^2(r/2) = cosh r - 1
}

double mu(double r, HalfInteger m, double B) { return mu(r, m.value(), B); }

double mu_derivative(double r, double m, double B) {
  if (!(r > 0.0))
    throw Error(errc::axis_degeneracy, "mu'(r) has a 1/sinh^2 r pole; r = " + std::to_string(r));
  double shr = std::sinh(r);
  double chr = std::cosh(r);
  double s = std::sinh(0.5 * r);
  return -B - (m - 2.0 * B * s * s) * chr / (shr * shr);
}

double branch_sign_to_AM(Branch branch, const PhysicalParams& params) {
  double p = axial_momentum(params);
  return branch == Branch::plus ? params.epsilon + p : params.epsilon - p;
}

double branch_momentum(Branch branch, const PhysicalParams& params) {
  double p = axial_momentum(params);
  return branch == Branch::plus ? p : -p;
}

}  // namespace h3landau
