#include "h3landau/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

namespace h3landau {

double SpinorField::checked_lambda(double lambda_sq) {
  if (!(lambda_sq > 0.0))
    throw Error(errc::degenerate_separation,
                "assembled state needs lambda_sq > 0");
  return std::sqrt(lambda_sq);
}

SpinorField::SpinorField(const SpectralState& state, int axial_variant, Branch branch,
                         const PhysicalParams& params)
    : axial_(axial_spec(axial_variant, branch_momentum(branch, params),
                        checked_lambda(state.lambda_sq))),
      radial_(radial_spec(state.variant, state.m, params.B, state.lambda_sq)),
      n_(state.n),
      lambda_(std::sqrt(state.lambda_sq)),
      q_(branch_momentum(branch, params)),
      A_(branch_sign_to_AM(branch, params) / params.M, 0.0) {}

const SpinorField::ZPair& SpinorField::axial_at(double z) const {
  auto it = z_cache_.find(z);
  if (it == z_cache_.end())
    it = z_cache_.emplace(z, ZPair{eval_Z1(axial_, z), eval_Z2(axial_, z)}).first;
  return it->second;
}

const SpinorField::RPair& SpinorField::radial_at(double r) const {
  auto it = r_cache_.find(r);
  if (it == r_cache_.end())
    it = r_cache_
             .emplace(r, RPair{eval_R1(radial_, n_, r), eval_R2(radial_, n_, lambda_, r)})
             .first;
  return it->second;
}

std::complex<double> SpinorField::component(int index, double r, double z) const {
  const ZPair& Z = axial_at(z);
  const RPair& R = radial_at(r);
  switch (index) {
    case 1:
      return Z.z1 * R.r1;
    case 2:
      return Z.z2 * R.r2;
    case 3:
      return A_ * (Z.z1 * R.r1);  // exactly A_ times component 1
    case 4:
      return A_ * (Z.z2 * R.r2);
    default:
      throw Error(errc::bad_argument, "component index must be in 1..4");
  }
}

std::array<ComplexFn2, 4> SpinorField::component_functions() const {
  std::array<ComplexFn2, 4> fns;
  for (int a = 0; a < 4; ++a)
    fns[a] = [this, a](double r, double z) { return component(a + 1, r, z); };
  return fns;
}

SpinorSample assemble(const SpectralState& state, int axial_variant, Branch branch,
                      const PhysicalParams& params, const CylindricalPoint& point) {
  if (!(point.r > 0.0))
    throw Error(errc::axis_degeneracy, "assembled sample needs r > 0");
  SpinorField field(state, axial_variant, branch, params);
  SpinorSample s;
  s.point = point;
  s.f1 = field.component(1, point.r, point.z);
  s.f2 = field.component(2, point.r, point.z);
  s.f3 = field.component(3, point.r, point.z);
  s.f4 = field.component(4, point.r, point.z);
  s.psi_scale = 1.0 / (std::sqrt(std::sinh(point.r)) * std::cosh(point.z));
  return s;
}

std::vector<SpectralState> enumerate_states(double B,
                                            const std::vector<HalfInteger>& m_values,
                                            const PhysicalParams& /*params*/) {
  if (!(B > 0.0))
    throw Error(errc::bad_argument, "field strength must be positive");
  std::vector<SpectralState> out;
  std::set<std::tuple<int, int, int>> seen;
  for (int variant : {3, 4}) {
    for (const HalfInteger& m : m_values) {
      if (radial_variant_rejection(variant, m, B)) continue;
      for (const auto& [n, lam_sq] : allowed_levels(variant, B, m)) {
        if (!seen.insert({variant, m.twice(), n}).second) continue;
        double k = variant == 3 ? static_cast<double>(n) : n - m.value() + 0.5;
        out.push_back(SpectralState{variant, m, n, lam_sq, true, 2.0 * B * k});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SpectralState& a, const SpectralState& b) {
    if (a.lambda_sq != b.lambda_sq) return a.lambda_sq < b.lambda_sq;
    return std::make_tuple(a.variant, a.m.twice(), a.n) <
           std::make_tuple(b.variant, b.m.twice(), b.n);
  });
  return out;
}

FlatLimitParams FlatLimitParams::make(double rho, double B0) {
  if (!(rho > 0.0))
    throw Error(errc::bad_argument, "curvature radius must be positive");
  if (!(B0 > 0.0))
    throw Error(errc::bad_argument, "flat field strength must be positive");
  return FlatLimitParams{rho, B0};
}

FlatLimitResult flat_limit_check(double B0, int n, HalfInteger m, int variant,
                                 double rho) {
  FlatLimitParams fp = FlatLimitParams::make(rho, B0);
  double k = variant == 3 ? static_cast<double>(n) : n - m.value() + 0.5;
  if (!(k > 0.0))
    throw Error(errc::level_outside_well,
                "level index lies below the first admissible level");
  double B = fp.curved_field();
  double lam_sq = quantized_lambda_sq(variant, B, m, n);
  double curved = lam_sq / (rho * rho);
  double flat = 2.0 * B0 * k;
  // Scale the mismatch by rho^2 before subtracting: flat*rho^2 and lam_sq are
  // exactly representable for moderate inputs, so this avoids the cancellation
  // in (flat - curved) that would otherwise drown the O(1/rho^2) difference in
  // rounding noise at large rho.
  double rel = std::fabs(flat * (rho * rho) - lam_sq) / (flat * (rho * rho));
  return FlatLimitResult{curved, flat, rel};
}

}  // namespace h3landau
