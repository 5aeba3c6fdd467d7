#include "h3landau/radial.hpp"

#include <cmath>
#include <string>

namespace h3landau {

namespace {

void check_variant(int variant) {
  if (variant != 3 && variant != 4)
    throw Error(errc::bad_argument, "radial variant must be 3 or 4, got " +
                                        std::to_string(variant));
}

void check_m_range(int variant, HalfInteger m, double B) {
  double mv = m.value();
  if (variant == 3 && !(mv > 0.0))
    throw Error(errc::inadmissible_m, "variant 3 requires m > 0, got m = " + m.str());
  if (variant == 4 && !(mv > -2.0 * B && mv <= 1.0))
    throw Error(errc::inadmissible_m,
                "variant 4 requires -2B < m <= 1, got m = " + m.str() +
                    " at B = " + std::to_string(B));
}

// Real double-double value and r-derivative of R1; parameters are rebuilt
// in double-double from (variant, m, B, lambda_sq) so the downstream
// finite-difference stencils see full double accuracy.
struct R1Parts {
  Dd value;
  Dd deriv;
};

R1Parts r1_parts(const RadialSpec& s, int n, double r) {
  double mv = s.m.value();
  Dd Bd{s.B};
  Dd sq = dd_sqrt(Bd * Bd - Dd{s.lambda_sq});
  Dd base = s.variant == 3 ? -Bd : -Bd - mv + 0.5;
  Dd beta = base - sq;
  Dd gamma = mul_pwr2(Bd, -2.0) - mv + 0.5;
  Dd A{s.A_exp}, C{s.C_exp};

  Dd rd{r};
  Dd ch = dd_cosh(rd), sh = dd_sinh(rd);
  Dd sh_half = dd_sinh(mul_pwr2(rd, 0.5));
  Dd xm = mul_pwr2(sh_half * sh_half, 2.0);  // cosh r - 1, cancellation-free
  Dd xp = ch + 1.0;
  Dd y = mul_pwr2(xp, 0.5);

  Dd P = dd_pow(xp, A) * dd_pow(xm, C);
  Cdd F = detail::hyp2f1_polynomial_dd(n, Cdd{beta}, Cdd{gamma}, y);
  Dd value = P * F.re;

  // d/dr ln P = A sh/(1+ch) + C sh/(ch-1); dy/dr = sh/2.
  Dd logP_dr = A * sh / xp + C * sh / xm;
  Dd Fd{0.0};
  if (n > 0) {
    Cdd Fd_poly =
        detail::hyp2f1_polynomial_dd(n - 1, Cdd{beta + 1.0}, Cdd{gamma + 1.0}, y);
    Fd = (Dd{static_cast<double>(-n)} * beta / gamma) * Fd_poly.re;
  }
  Dd deriv = P * (logP_dr * F.re + Fd * mul_pwr2(sh, 0.5));
  return {value, deriv};
}

void check_terminating(const RadialSpec& s, int n) {
  if (n < 0)
    throw Error(errc::bad_argument, "level index must be non-negative, got " +
                                        std::to_string(n));
  double alpha = s.hyper.alpha.real();
  if (std::fabs(alpha + static_cast<double>(n)) > 1e-8 || s.hyper.alpha.imag() != 0.0)
    throw Error(errc::non_terminating,
                "alpha = " + std::to_string(alpha) + " is not -n for n = " +
                    std::to_string(n) + "; lambda_sq is off the quantized value");
}

}  // namespace

RadialSpec radial_spec(int variant, HalfInteger m, double B, double lambda_sq) {
  check_variant(variant);
  check_m_range(variant, m, B);
  if (lambda_sq > B * B)
    throw Error(errc::complex_root, "lambda_sq = " + std::to_string(lambda_sq) +
                                        " exceeds B^2 = " + std::to_string(B * B));
  double mv = m.value();
  double sq = std::sqrt(B * B - lambda_sq);
  double base = variant == 3 ? -B : -B - mv + 0.5;
  double A_exp = -B - 0.5 * mv;
  double C_exp = variant == 3 ? 0.5 * mv : 0.5 * (1.0 - mv);
  HypergeoArgs hyper{base + sq, base - sq, -2.0 * B - mv + 0.5, 0.0};
  return RadialSpec{variant, A_exp, C_exp, hyper, m, B, lambda_sq};
}

double quantized_lambda_sq(int variant, double B, HalfInteger m, int n) {
  check_variant(variant);
  if (n < 0)
    throw Error(errc::bad_argument, "level index must be non-negative, got " +
                                        std::to_string(n));
  double margin = constraint_margin(variant, B, m, n);
  if (!(margin > 0.0))
    throw Error(errc::level_outside_well,
                "confinement margin " + std::to_string(margin) + " <= 0 for n = " +
                    std::to_string(n));
  double k = variant == 3 ? static_cast<double>(n)
                          : static_cast<double>(n) - m.value() + 0.5;
  return 2.0 * B * k - k * k;
}

std::vector<std::pair<int, double>> allowed_levels(int variant, double B, HalfInteger m) {
  check_variant(variant);
  check_m_range(variant, m, B);
  std::vector<std::pair<int, double>> out;
  int n = 1;
  if (variant == 4) {
    // Smallest n >= 0 with k = n - m + 1/2 > 0.
    n = std::max(0, static_cast<int>(std::floor(m.value() + 0.5)));
    if (static_cast<double>(n) - m.value() + 0.5 <= 0.0) ++n;
  }
  for (; constraint_margin(variant, B, m, n) > 0.0; ++n)
    out.emplace_back(n, quantized_lambda_sq(variant, B, m, n));
  return out;
}

double eval_R1(const RadialSpec& spec, int n, double r) {
  check_terminating(spec, n);
  if (!(r >= 0.0))
    throw Error(errc::bad_argument, "r must be non-negative, got " + std::to_string(r));
  if (r == 0.0) return 0.0;  // C_exp > 0 for every half-integer m
  return to_double(r1_parts(spec, n, r).value);
}

double eval_R1_prime(const RadialSpec& spec, int n, double r) {
  check_terminating(spec, n);
  if (!(r > 0.0))
    throw Error(errc::axis_degeneracy, "derivative needs r > 0, got " + std::to_string(r));
  return to_double(r1_parts(spec, n, r).deriv);
}

double eval_R2(const RadialSpec& spec, int n, double lambda, double r) {
  check_terminating(spec, n);
  if (lambda == 0.0)
    throw Error(errc::degenerate_separation, "R2 reconstruction divides by lambda");
  if (!(r > 0.0))
    throw Error(errc::axis_degeneracy, "R2 needs r > 0, got " + std::to_string(r));
  R1Parts parts = r1_parts(spec, n, r);
  // mu(r) in double-double: (m - B(cosh r - 1))/sinh r.
  Dd rd{r};
  Dd sh_half = dd_sinh(mul_pwr2(rd, 0.5));
  Dd xm = mul_pwr2(sh_half * sh_half, 2.0);
  Dd mu_dd = (Dd{spec.m.value()} - Dd{spec.B} * xm) / dd_sinh(rd);
  return to_double((parts.deriv - mu_dd * parts.value) / Dd{lambda});
}

std::optional<std::string> radial_variant_rejection(int variant, HalfInteger m, double B) {
  double mv = m.value();
  switch (variant) {
    case 1: {
      // A = (2B+m+1)/2, C = m/2.
      if (mv < 0.0)
        return "C_exp = m/2 = " + std::to_string(0.5 * mv) +
               " < 0: solution singular at the axis";
      return "A_exp = (2B+m+1)/2 = " + std::to_string(0.5 * (2.0 * B + mv + 1.0)) +
             " > 0: solution diverges as r -> infinity";
    }
    case 2: {
      // A = (2B+m+1)/2, C = (1-m)/2; C+A = B+1 regardless of m.
      if (mv > 1.0)
        return "C_exp = (1-m)/2 = " + std::to_string(0.5 * (1.0 - mv)) +
               " < 0: solution singular at the axis";
      if (0.5 * (2.0 * B + mv + 1.0) >= 0.0)
        return "A_exp = (2B+m+1)/2 = " + std::to_string(0.5 * (2.0 * B + mv + 1.0)) +
               " >= 0: solution diverges as r -> infinity";
      return "C_exp + A_exp = B + 1 = " + std::to_string(B + 1.0) +
             " > 0: solution diverges as r -> infinity";
    }
    case 3:
      if (!(mv > 0.0)) return "variant 3 requires m > 0, got m = " + m.str();
      return std::nullopt;
    case 4:
      if (!(mv > -2.0 * B && mv <= 1.0))
        return "variant 4 requires -2B < m <= 1, got m = " + m.str();
      return std::nullopt;
    default:
      throw Error(errc::bad_argument, "variant must be 1..4, got " + std::to_string(variant));
  }
}

double constraint_margin(int variant, double B, HalfInteger m, int n) {
  check_variant(variant);
  return variant == 3 ? B - static_cast<double>(n)
                      : B + m.value() - 0.5 - static_cast<double>(n);
}

}  // namespace h3landau
