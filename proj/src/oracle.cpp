#include "h3landau/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "h3landau/separation.hpp"

namespace h3landau {

namespace {

// 4th-order central differences with stencil step h.
template <typename F>
auto fd_first(const F& f, double x, double h) -> decltype(f(x)) {
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}

template <typename F>
auto fd_second(const F& f, double x, double h) -> decltype(f(x)) {
  return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h)) /
         (12.0 * h * h);
}

void track(ResidualReport& rep, double defect, double loc, double loc_z, int relation) {
  if (defect > rep.max_abs) {
    rep.max_abs = defect;
    rep.argmax_location = loc;
    rep.argmax_location_z = loc_z;
  }
  if (relation >= 0 && relation < static_cast<int>(rep.per_relation.size()) &&
      defect > rep.per_relation[relation])
    rep.per_relation[relation] = defect;
}

}  // namespace

Grid1D Grid1D::make(double lo, double hi, int count) {
  if (count < 16)
    throw Error(errc::bad_argument, "grid needs at least 16 nodes, got " +
                                        std::to_string(count));
  if (!(hi > lo))
    throw Error(errc::bad_argument, "grid needs hi > lo");
  return Grid1D{lo, hi, count};
}

double geometry_defect_hyperboloid(const CylindricalPoint& p) {
  EmbeddingVector u = embed(p);
  return std::fabs(u.u0 * u.u0 - u.u1 * u.u1 - u.u2 * u.u2 - u.u3 * u.u3 - 1.0);
}

double geometry_defect_tetrad(const CylindricalPoint& p) {
  TetradDiagonal e = tetrad_at(p);
  MetricComponents g = metric_at(p);
  return std::max({std::fabs(e.e_t * e.e_t * g.g_tt - 1.0),
                   std::fabs(e.e_r * e.e_r * g.g_rr + 1.0),
                   std::fabs(e.e_phi * e.e_phi * g.g_phiphi + 1.0),
                   std::fabs(e.e_z * e.e_z * g.g_zz + 1.0)});
}

double geometry_defect_christoffel(const CylindricalPoint& p, double h) {
  auto diag = [](const CylindricalPoint& q) {
    MetricComponents g = metric_at(q);
    return std::array<double, 4>{g.g_tt, g.g_rr, g.g_phiphi, g.g_zz};
  };
  std::array<double, 4> g0 = diag(p);

  // dgm[mu][a] = d g_aa / d x^mu; the metric depends on r and z only.
  double dgm[4][4] = {};
  CylindricalPoint rp = p, rm = p;
  rp.r += h;
  rm.r -= h;
  std::array<double, 4> gp = diag(rp), gm = diag(rm);
  for (int a = 0; a < 4; ++a) dgm[1][a] = (gp[a] - gm[a]) / (2.0 * h);
  CylindricalPoint zp = p, zm = p;
  zp.z += h;
  zm.z -= h;
  gp = diag(zp);
  gm = diag(zm);
  for (int a = 0; a < 4; ++a) dgm[3][a] = (gp[a] - gm[a]) / (2.0 * h);

  ConnectionData closed = christoffel_at(p);
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double fd = 0.0;
        if (a == b) fd += dgm[c][a];
        if (a == c) fd += dgm[b][a];
        if (b == c) fd -= dgm[a][b];
        fd *= 0.5 / g0[a];
        worst = std::max(worst, std::fabs(fd - closed.christoffel[a][b][c]));
      }
  return worst;
}

std::complex<double> axial_ode_defect(const ComplexFn& Z1, double p, double lambda,
                                      double z, double h) {
  double thz = std::tanh(z);
  double chz = std::cosh(z);
  std::complex<double> coeff{p * p - lambda * lambda / (chz * chz), p * thz};
  return fd_second(Z1, z, h) + thz * fd_first(Z1, z, h) + coeff * Z1(z);
}

double radial_bracket(double r, double m, double B, double lambda_sq) {
  double chr = std::cosh(r);
  double shr = std::sinh(r);
  double s = std::sinh(0.5 * r);
  double x = 2.0 * s * s;  // cosh r - 1
  double num = m - B * x;
  return (m * chr + B * x) / (shr * shr) - num * num / (shr * shr) + lambda_sq;
}

double radial_bracket_mu_form(double r, double m, double B, double lambda_sq) {
  double u = mu(r, m, B);
  return lambda_sq - mu_derivative(r, m, B) - u * u;
}

double radial_ode_defect(const RealFn& R1, double m, double B, double lambda_sq,
                         double r, double h) {
  return fd_second(R1, r, h) + radial_bracket(r, m, B, lambda_sq) * R1(r);
}

ResidualReport residual_axial_ode(const ComplexFn& Z1, double p, double lambda,
                                  const Grid1D& grid, const ResidualOptions& opt) {
  ResidualReport rep;
  rep.grid = grid;
  for (int i = 0; i < grid.count; ++i) {
    double z = grid.node(i);
    track(rep, std::abs(axial_ode_defect(Z1, p, lambda, z, opt.fd_step)), z, 0.0, -1);
  }
  return rep;
}

ResidualReport residual_radial_ode(const RealFn& R1, HalfInteger m, double B,
                                   double lambda_sq, const Grid1D& grid,
                                   const ResidualOptions& opt) {
  if (!(grid.lo - 2 * opt.fd_step > 0.0))
    throw Error(errc::axis_degeneracy, "radial grid must stay clear of r = 0");
  ResidualReport rep;
  rep.grid = grid;
  for (int i = 0; i < grid.count; ++i) {
    double r = grid.node(i);
    track(rep, std::fabs(radial_ode_defect(R1, m.value(), B, lambda_sq, r, opt.fd_step)),
          r, 0.0, -1);
  }
  return rep;
}

ResidualReport residual_first_order(const ComplexFn& Z1, const ComplexFn& Z2,
                                    const AxialRelation& rel, const Grid1D& grid,
                                    const ResidualOptions& opt) {
  std::complex<double> ip{0.0, rel.p};
  ResidualReport rep;
  rep.grid = grid;
  rep.per_relation.assign(2, 0.0);
  for (int i = 0; i < grid.count; ++i) {
    double z = grid.node(i);
    double chz = std::cosh(z);
    std::complex<double> d1 =
        chz * (fd_first(Z1, z, opt.fd_step) + ip * Z1(z)) - rel.lambda * Z2(z);
    std::complex<double> d2 =
        chz * (fd_first(Z2, z, opt.fd_step) - ip * Z2(z)) - rel.lambda * Z1(z);
    track(rep, std::abs(d1), z, 0.0, 0);
    track(rep, std::abs(d2), z, 0.0, 1);
  }
  return rep;
}

ResidualReport residual_first_order(const RealFn& R1, const RealFn& R2,
                                    const RadialRelation& rel, const Grid1D& grid,
                                    const ResidualOptions& opt) {
  if (!(grid.lo - 2 * opt.fd_step > 0.0))
    throw Error(errc::axis_degeneracy, "radial grid must stay clear of r = 0");
  ResidualReport rep;
  rep.grid = grid;
  rep.per_relation.assign(2, 0.0);
  double mv = rel.m.value();
  for (int i = 0; i < grid.count; ++i) {
    double r = grid.node(i);
    double u = mu(r, mv, rel.B);
    double d1 = fd_first(R2, r, opt.fd_step) + u * R2(r) + rel.lambda * R1(r);
    double d2 = fd_first(R1, r, opt.fd_step) - u * R1(r) - rel.lambda * R2(r);
    track(rep, std::fabs(d1), r, 0.0, 0);
    track(rep, std::fabs(d2), r, 0.0, 1);
  }
  return rep;
}

ResidualReport residual_dirac_system(const std::array<ComplexFn2, 4>& f, double epsilon,
                                     double M, HalfInteger m, double B,
                                     const Grid1D& r_grid, const Grid1D& z_grid,
                                     const ResidualOptions& opt) {
  if (!(r_grid.lo - 2 * opt.fd_step > 0.0))
    throw Error(errc::axis_degeneracy, "radial grid must stay clear of r = 0");
  ResidualReport rep;
  rep.grid = r_grid;
  rep.per_relation.assign(4, 0.0);
  double mv = m.value();
  const std::complex<double> i_unit{0.0, 1.0};
  for (int ir = 0; ir < r_grid.count; ++ir) {
    double r = r_grid.node(ir);
    double u = mu(r, mv, B);
    for (int iz = 0; iz < z_grid.count; ++iz) {
      double z = z_grid.node(iz);
      double chz = std::cosh(z);

      std::complex<double> v[4], dr[4], dz[4];
      for (int a = 0; a < 4; ++a) {
        const auto& fa = f[a];
        v[a] = fa(r, z);
        dr[a] = fd_first([&](double rr) { return fa(rr, z); }, r, opt.fd_step);
        dz[a] = fd_first([&](double zz) { return fa(r, zz); }, z, opt.fd_step);
      }

      std::complex<double> e0 =
          dr[3] + u * v[3] + chz * dz[2] + i_unit * chz * (epsilon * v[2] - M * v[0]);
      std::complex<double> e1 =
          dr[2] - u * v[2] - chz * dz[3] + i_unit * chz * (epsilon * v[3] - M * v[1]);
      std::complex<double> e2 =
          dr[1] + u * v[1] + chz * dz[0] - i_unit * chz * (epsilon * v[0] - M * v[2]);
      std::complex<double> e3 =
          dr[0] - u * v[0] - chz * dz[1] - i_unit * chz * (epsilon * v[1] - M * v[3]);

      track(rep, std::abs(e0), r, z, 0);
      track(rep, std::abs(e1), r, z, 1);
      track(rep, std::abs(e2), r, z, 2);
      track(rep, std::abs(e3), r, z, 3);
    }
  }
  return rep;
}

namespace {

// Terminal value u(r_hi) of the outward integration at a trial lambda^2.
double shoot_mismatch(double B, double mv, double lambda_sq, const Grid1D& grid) {
  double s = mv > 0.0 ? 0.5 * mv : 0.5 * (1.0 - mv);
  // Series expansion around the axis in x = cosh r - 1:
  // u = x^s (1 + a1 x + a2 x^2), from the indicial recurrence.
  double n0 = mv - mv * mv;
  double n1 = mv + B + 2.0 * mv * B;
  double c_m1 = 0.5 * n0;
  double c0 = 0.5 * n1 - 0.25 * n0;
  double c1 = -0.5 * B * B - 0.25 * n1 + 0.125 * n0;
  double a1 = -(s * s + lambda_sq + c0) / ((s + 1.0) * (2.0 * s + 1.0) + c_m1);
  double a2 = -(a1 * ((s + 1.0) * (s + 1.0) + lambda_sq + c0) + c1) /
              ((s + 2.0) * (2.0 * s + 3.0) + c_m1);

  double r0 = grid.lo;
  double sh0 = std::sinh(0.5 * r0);
  double x0 = 2.0 * sh0 * sh0;
  double xs = std::pow(x0, s);
  double u = xs * (1.0 + a1 * x0 + a2 * x0 * x0);
  double du = std::sinh(r0) * (xs / x0) *
              (s + (s + 1.0) * a1 * x0 + (s + 2.0) * a2 * x0 * x0);

  auto rhs = [&](double r) {
    double sh = std::sinh(r), ch = std::cosh(r);
    double num = mv - B * (ch - 1.0);
    double w = num / sh;
    double wp = -B - num * ch / (sh * sh);
    return wp + w * w - lambda_sq;
  };

  // Classical RK4 on (u, u'); the end value of each step seeds the next.
  double h = grid.step();
  double q_lo = rhs(r0);
  for (int i = 0; i < grid.count - 1; ++i) {
    double q_mid = rhs(r0 + (i + 0.5) * h);
    double q_hi = rhs(r0 + (i + 1.0) * h);
    double k1u = du, k1v = q_lo * u;
    double k2u = du + 0.5 * h * k1v, k2v = q_mid * (u + 0.5 * h * k1u);
    double k3u = du + 0.5 * h * k2v, k3v = q_mid * (u + 0.5 * h * k2u);
    double k4u = du + h * k3v, k4v = q_hi * (u + h * k3u);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    du += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    q_lo = q_hi;
    if (std::fabs(u) > 1e250) {  // only the sign of u matters downstream
      u *= 1e-200;
      du *= 1e-200;
    }
  }
  return u;
}

}  // namespace

std::vector<double> shoot_radial_eigenvalues(double B, HalfInteger m,
                                             double lambda_sq_ceiling, const Grid1D& grid,
                                             const ShootOptions& opt) {
  if (!(grid.lo > 0.0 && grid.lo <= 0.05))
    throw Error(errc::bad_argument, "shooting start must lie in (0, 0.05], got " +
                                        std::to_string(grid.lo));
  if (!(grid.hi >= 12.0))
    throw Error(errc::bad_argument, "shooting needs grid.hi >= 12 to resolve decay");

  double mv = m.value();
  double step = opt.scan_step > 0.0 ? opt.scan_step : std::min(0.25, B / 20.0);

  // Bound states live strictly below lambda^2 = B^2: the effective potential
  // flattens to B^2 at large radius, so above that threshold the outward
  // solution oscillates and boundary-mismatch sign changes are continuum
  // artifacts, not eigenvalues.
  double cap = std::min(lambda_sq_ceiling, B * B);

  std::vector<double> found;
  // Scan from one step above zero: the lambda = 0 boundary state is not an
  // admissible level, and the mismatch is singular in sign exactly there.
  double prev_lam = step;
  if (prev_lam > cap) return found;
  double prev_val = shoot_mismatch(B, mv, prev_lam, grid);
  for (double lam = prev_lam + step; lam <= cap + 1e-12; lam += step) {
    double val = shoot_mismatch(B, mv, lam, grid);
    if (prev_val == 0.0) {
      found.push_back(prev_lam);
    } else if (val != 0.0 && std::signbit(val) != std::signbit(prev_val)) {
      double a = prev_lam, b = lam, fa = prev_val;
      while (b - a > opt.bisect_tol) {
        double mid = 0.5 * (a + b);
        double fm = shoot_mismatch(B, mv, mid, grid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      found.push_back(0.5 * (a + b));
    }
    prev_lam = lam;
    prev_val = val;
  }
  return found;
}

}  // namespace h3landau
