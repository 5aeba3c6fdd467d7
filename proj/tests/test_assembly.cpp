#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "h3landau/assembly.hpp"

using namespace h3landau;

namespace {

using C = std::complex<double>;

const HalfInteger kHalf{1};

SpectralState ground_state() {
  return SpectralState{3, kHalf, 1, 9.0, true, 10.0};
}

PhysicalParams default_params() { return PhysicalParams::make(5.0, 3.0, 5.0); }

}  // namespace

TEST_CASE("assembled sample structure") {
  SpectralState st = ground_state();
  PhysicalParams params = default_params();
  CylindricalPoint pt = CylindricalPoint::make(0.0, 1.2, 0.0, 0.7);
  SpinorSample s = assemble(st, 1, Branch::plus, params, pt);

  // Branch +: q = +4, A = (5+4)/3 = 3; proportionality is exact.
  CHECK(s.f3 == 3.0 * s.f1);
  CHECK(s.f4 == 3.0 * s.f2);
  CHECK(std::abs(s.f1) > 0.0);
  CHECK(std::abs(s.f2) > 0.0);
  CHECK(s.psi_scale ==
        doctest::Approx(1.0 / (std::sqrt(std::sinh(1.2)) * std::cosh(0.7))).epsilon(1e-14));
  CHECK(s.point.r == 1.2);

  // f1 and f2 are the separated products themselves.
  AxialSpec az = axial_spec(1, 4.0, 3.0);
  RadialSpec rs = radial_spec(3, kHalf, 5.0, 9.0);
  C f1 = eval_Z1(az, 0.7) * eval_R1(rs, 1, 1.2);
  C f2 = eval_Z2(az, 0.7) * eval_R2(rs, 1, 3.0, 1.2);
  CHECK(std::abs(s.f1 - f1) <= 1e-14 * std::abs(f1));
  CHECK(std::abs(s.f2 - f2) <= 1e-14 * std::abs(f2));

  CHECK_THROWS_AS(assemble(st, 1, Branch::plus, params, CylindricalPoint::make(0, 0, 0, 0)),
                  Error);
}

TEST_CASE("branch minus is the momentum-negated construction") {
  SpectralState st = ground_state();
  PhysicalParams params = default_params();
  AxialSpec reversed = axial_spec(1, -4.0, 3.0);  // q = -p by hand
  RadialSpec rs = radial_spec(3, kHalf, 5.0, 9.0);
  const C A_minus{1.0 / 3.0, 0.0};  // (5 - 4)/3

  for (double r : {0.4, 1.5, 3.0}) {
    for (double z : {-2.0, 0.3, 1.8}) {
      SpinorSample s = assemble(st, 1, Branch::minus, params, CylindricalPoint::make(0, r, 0, z));
      C f1 = eval_Z1(reversed, z) * eval_R1(rs, 1, r);
      C f2 = eval_Z2(reversed, z) * eval_R2(rs, 1, 3.0, r);
      CHECK(std::abs(s.f1 - f1) <= 1e-12 * std::max(1.0, std::abs(f1)));
      CHECK(std::abs(s.f2 - f2) <= 1e-12 * std::max(1.0, std::abs(f2)));
      CHECK(std::abs(s.f3 - A_minus * f1) <= 1e-12 * std::max(1.0, std::abs(f1)));
      CHECK(std::abs(s.f4 - A_minus * f2) <= 1e-12 * std::max(1.0, std::abs(f2)));
    }
  }
}

TEST_CASE("spinor field evaluator") {
  SpectralState st = ground_state();
  PhysicalParams params = default_params();
  SpinorField field(st, 1, Branch::plus, params);
  CHECK(field.momentum() == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(field.self_consistency().real() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(field.self_consistency().imag() == 0.0);

  SpinorSample s = assemble(st, 1, Branch::plus, params, CylindricalPoint::make(0, 0.9, 0, -0.4));
  CHECK(field.component(1, 0.9, -0.4) == s.f1);
  CHECK(field.component(2, 0.9, -0.4) == s.f2);
  CHECK(field.component(3, 0.9, -0.4) == s.f3);
  CHECK(field.component(4, 0.9, -0.4) == s.f4);
  std::array<ComplexFn2, 4> fns = field.component_functions();
  CHECK(fns[0](0.9, -0.4) == s.f1);
  CHECK(fns[3](0.9, -0.4) == s.f4);
  CHECK_THROWS_AS(field.component(0, 1.0, 0.0), Error);
  CHECK_THROWS_AS(field.component(5, 1.0, 0.0), Error);
}

TEST_CASE("assembled state solves the four-equation system") {
  SpectralState st = ground_state();
  PhysicalParams params = default_params();
  Grid1D r_grid = Grid1D::make(0.2, 6.0, 16);
  Grid1D z_grid = Grid1D::make(-4.0, 4.0, 16);
  for (Branch br : {Branch::plus, Branch::minus}) {
    SpinorField field(st, 1, br, params);
    std::array<ComplexFn2, 4> fns = field.component_functions();
    double scale = 0.0;
    for (int i = 0; i < r_grid.count; ++i)
      for (int j = 0; j < z_grid.count; ++j)
        for (const auto& fa : fns)
          scale = std::max(scale, std::abs(fa(r_grid.node(i), z_grid.node(j))));
    ResidualReport rep =
        residual_dirac_system(fns, params.epsilon, params.M, st.m, 5.0, r_grid, z_grid);
    REQUIRE(rep.per_relation.size() == 4);
    CHECK(rep.max_abs / scale <= 1e-6);
  }
}

TEST_CASE("wrong proportionality constant leaves a macroscopic defect") {
  SpectralState st = ground_state();
  PhysicalParams params = default_params();
  SpinorField field(st, 1, Branch::plus, params);
  std::array<ComplexFn2, 4> good = field.component_functions();
  // Scale the upper pair by 1.1: the cross-coupling equations now carry a
  // mismatch proportional to (A' - A) M f1.
  std::array<ComplexFn2, 4> bad = {
      good[0], good[1],
      [&good](double r, double z) { return 1.1 * good[2](r, z); },
      [&good](double r, double z) { return 1.1 * good[3](r, z); }};
  Grid1D r_grid = Grid1D::make(0.2, 6.0, 16);
  Grid1D z_grid = Grid1D::make(-4.0, 4.0, 16);
  double scale = 0.0;
  for (int i = 0; i < r_grid.count; ++i)
    for (int j = 0; j < z_grid.count; ++j)
      for (const auto& fa : good)
        scale = std::max(scale, std::abs(fa(r_grid.node(i), z_grid.node(j))));
  ResidualReport rep =
      residual_dirac_system(bad, params.epsilon, params.M, st.m, 5.0, r_grid, z_grid);
  CHECK(rep.max_abs > 1e-3 * scale);
}

TEST_CASE("degenerate or invalid states are rejected") {
  PhysicalParams params = default_params();
  SpectralState zero{3, kHalf, 0, 0.0, true, 0.0};
  try {
    assemble(zero, 1, Branch::plus, params, CylindricalPoint::make(0, 1, 0, 0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_separation);
  }
  SpectralState negative{3, kHalf, 1, -4.0, true, 0.0};
  CHECK_THROWS_AS(assemble(negative, 1, Branch::plus, params, CylindricalPoint::make(0, 1, 0, 0)),
                  Error);
}

TEST_CASE("state enumeration merges both channels") {
  std::vector<SpectralState> states =
      enumerate_states(5.0, {kHalf}, default_params());
  REQUIRE(states.size() == 8);
  const double lsq[8] = {9, 9, 16, 16, 21, 21, 24, 24};
  for (int i = 0; i < 8; ++i) {
    CHECK(states[i].lambda_sq == doctest::Approx(lsq[i]).epsilon(1e-14));
    CHECK(states[i].variant == (i % 2 == 0 ? 3 : 4));  // ties sorted by variant
    CHECK(states[i].n == i / 2 + 1);                   // k = n at m = 1/2
    CHECK(states[i].normalizable);
    CHECK(states[i].flat_limit_lambda0_sq ==
          doctest::Approx(10.0 * (i / 2 + 1)).epsilon(1e-14));
  }

  CHECK(enumerate_states(0.4, {kHalf}, default_params()).empty());

  // Duplicated m entries collapse; inadmissible m values contribute nothing.
  CHECK(enumerate_states(5.0, {kHalf, kHalf}, default_params()).size() == 8);
  std::vector<SpectralState> mixed =
      enumerate_states(3.0, {HalfInteger{-1}, HalfInteger{5}}, default_params());
  for (const SpectralState& st : mixed) {
    if (st.m == HalfInteger{-1}) CHECK(st.variant == 4);  // channel 3 needs m > 0
    if (st.m == HalfInteger{5}) CHECK(st.variant == 3);   // channel 4 needs m <= 1
  }
  CHECK_FALSE(mixed.empty());
}

TEST_CASE("every enumerated eigenvalue lies in the confinement window") {
  for (double B : {3.0, 5.0, 10.0}) {
    std::vector<SpectralState> states = enumerate_states(
        B, {HalfInteger{-1}, kHalf, HalfInteger{3}, HalfInteger{5}}, default_params());
    double prev = 0.0;
    for (const SpectralState& st : states) {
      CHECK(st.lambda_sq > 0.0);
      CHECK(st.lambda_sq <= B * B);
      CHECK(st.lambda_sq >= prev);  // sorted
      prev = st.lambda_sq;
    }
  }
}

TEST_CASE("flat-space limit of the eigenvalues") {
  FlatLimitResult a = flat_limit_check(1.0, 2, kHalf, 3, 10.0);
  CHECK(a.lambda0_sq_flat == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(a.lambda0_sq_curved == doctest::Approx(3.96).epsilon(1e-14));
  CHECK(a.rel_error == doctest::Approx(0.01).epsilon(1e-12));

  FlatLimitResult b = flat_limit_check(1.0, 2, kHalf, 3, 100.0);
  CHECK(b.rel_error == doctest::Approx(1e-4).epsilon(1e-10));

  FlatLimitResult c = flat_limit_check(1.0, 1, kHalf, 4, 10.0);
  CHECK(c.lambda0_sq_flat == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(c.lambda0_sq_curved == doctest::Approx(1.99).epsilon(1e-14));

  // The relative error decays exactly as k/(2 B0 rho^2).
  for (double rho : {10.0, 100.0, 1000.0}) {
    FlatLimitResult f = flat_limit_check(1.0, 2, kHalf, 3, rho);
    CHECK(f.rel_error * rho * rho == doctest::Approx(1.0).epsilon(1e-10));
  }

  // Level must exist at the scaled field: B = B0 rho^2 = 1 gives margin 0.
  CHECK_THROWS_AS(flat_limit_check(1.0, 1, kHalf, 3, 1.0), Error);
  // k = n - m + 1/2 = 0 sits below the first admissible channel-4 level.
  try {
    flat_limit_check(1.0, 0, kHalf, 4, 10.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::level_outside_well);
  }
}

TEST_CASE("flat-limit parameter validation") {
  CHECK_THROWS_AS(FlatLimitParams::make(0.0, 1.0), Error);
  CHECK_THROWS_AS(FlatLimitParams::make(10.0, -1.0), Error);
  FlatLimitParams p = FlatLimitParams::make(10.0, 1.0);
  CHECK(p.curved_field() == doctest::Approx(100.0).epsilon(1e-15));
}
