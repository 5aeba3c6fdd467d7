// Assembles the full four-component solutions from the separated axial and
// radial factors, enumerates the quantized transverse spectrum over quantum
// numbers, and computes the flat-space limit of the eigenvalues.

#ifndef H3LANDAU_ASSEMBLY_HPP_
#define H3LANDAU_ASSEMBLY_HPP_

#include <array>
#include <complex>
#include <map>
#include <vector>

#include "h3landau/axial.hpp"
#include "h3landau/geometry.hpp"
#include "h3landau/oracle.hpp"
#include "h3landau/radial.hpp"
#include "h3landau/separation.hpp"

namespace h3landau {

// One admissible bound level of the transverse motion.
struct SpectralState {
  int variant;  // radial channel, 3 or 4
  HalfInteger m;
  int n;  // level index; >= 1 in channel 3, >= 0 possible in channel 4
  double lambda_sq;
  bool normalizable;             // constraint margin positive
  double flat_limit_lambda0_sq;  // leading flat-space value 2*B*k
};

// The four components of the reduced spinor phi at one point plus the scale
// 1/(sqrt(sinh r) * cosh z) that maps phi back to the full field.  The scale
// is reported, not multiplied in: the first-order system checked by the
// residual oracle governs phi itself, and the scale diverges on the axis.
struct SpinorSample {
  CylindricalPoint point;
  std::complex<double> f1, f2, f3, f4;
  double psi_scale;
};

// Reusable evaluator for one assembled state.  Axial and radial factors are
// cached per coordinate, so grid sweeps (residual stencils revisit the same
// coordinates many times) cost one special-function evaluation per distinct
// coordinate.  Caching makes instances non-thread-safe.
class SpinorField {
 public:
  SpinorField(const SpectralState& state, int axial_variant, Branch branch,
              const PhysicalParams& params);

  // Component f_index at (r, z), index in 1..4.
  std::complex<double> component(int index, double r, double z) const;

  // Callables bound to this object; valid only while it lives.
  std::array<ComplexFn2, 4> component_functions() const;

  // Ratio A = f3/f1 = f4/f2 fixed by the branch.
  std::complex<double> self_consistency() const { return A_; }

  // Signed axial momentum carried by the branch.
  double momentum() const { return q_; }

 private:
  struct ZPair {
    std::complex<double> z1, z2;
  };
  struct RPair {
    double r1, r2;
  };

  static double checked_lambda(double lambda_sq);
  const ZPair& axial_at(double z) const;
  const RPair& radial_at(double r) const;

  AxialSpec axial_;
  RadialSpec radial_;
  int n_;
  double lambda_;
  double q_;
  std::complex<double> A_;
  mutable std::map<double, ZPair> z_cache_;
  mutable std::map<double, RPair> r_cache_;
};

// Point evaluation of the assembled solution: f1 = Z1 R1, f2 = Z2 R2,
// f3 = A f1, f4 = A f2 with A = (epsilon + q)/M and q the branch momentum.
// The separating constant is lambda = +sqrt(state.lambda_sq).
// Throws "axis degeneracy" on the axis, where psi_scale diverges.
SpinorSample assemble(const SpectralState& state, int axial_variant, Branch branch,
                      const PhysicalParams& params, const CylindricalPoint& point);

// Union of the channel-3 and channel-4 level sets over the given m values,
// deduplicated per (variant, m, n) and sorted by lambda_sq (ties broken by
// variant, m, n).  Inadmissible m values contribute nothing; the result may
// be empty.
std::vector<SpectralState> enumerate_states(double B,
                                            const std::vector<HalfInteger>& m_values,
                                            const PhysicalParams& params);

// Flat-space limit: curvature radius rho restored, field B = B0 * rho^2.
struct FlatLimitParams {
  double rho;  // curvature radius, > 0
  double B0;   // flat-space field strength, > 0

  static FlatLimitParams make(double rho, double B0);
  double curved_field() const { return B0 * rho * rho; }
};

struct FlatLimitResult {
  double lambda0_sq_curved;  // quantized lambda^2 at B0*rho^2, divided by rho^2
  double lambda0_sq_flat;    // 2*B0*k, k = n (channel 3) or n - m + 1/2 (channel 4)
  double rel_error;          // |flat - curved| / flat, equal to k / (2*B0*rho^2)
};

// Compares the curved eigenvalue against its flat-space target at curvature
// radius rho.  Throws "level outside well" when the level does not exist at
// the scaled field.
FlatLimitResult flat_limit_check(double B0, int n, HalfInteger m, int variant,
                                 double rho);

}  // namespace h3landau

#endif  // H3LANDAU_ASSEMBLY_HPP_
