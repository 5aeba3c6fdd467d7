#include "h3landau/axial.hpp"

#include <cmath>
#include <string>

namespace h3landau {

namespace {

using std::complex;

// Exponent pair (A, B) for the variant, as complex doubles.
void variant_exponents(int variant, double p, complex<double>& A, complex<double>& B) {
  switch (variant) {
    case 1: A = {0.5, 0.5 * p}; B = {0.5, -0.5 * p}; break;
    case 2: A = {0.0, -0.5 * p}; B = {0.0, 0.5 * p}; break;
    case 3: A = {0.5, 0.5 * p}; B = {0.0, 0.5 * p}; break;
    case 4: A = {0.0, -0.5 * p}; B = {0.5, -0.5 * p}; break;
    default:
      throw Error(errc::bad_argument, "axial variant must be 1..4, got " +
                                          std::to_string(variant));
  }
}

// Full-precision value and z-derivative of Z1.
struct Z1Parts {
  Cdd value;
  Cdd deriv;
};

Z1Parts z1_parts(const AxialSpec& s, double z) {
  Dd zd{z};
  // y = e^z/(2 cosh z) and w = 1 - y, each from its own stable form.
  Dd y = Dd{1.0} / (dd_exp(mul_pwr2(zd, -2.0)) + 1.0);
  Dd w = Dd{1.0} / (dd_exp(mul_pwr2(zd, 2.0)) + 1.0);

  Cdd A{s.A_exp}, B{s.B_exp};
  Cdd alpha{s.hyper.alpha}, beta{s.hyper.beta}, gamma{s.hyper.gamma};

  // Prefactor (e^z/cosh z)^A (e^{-z}/cosh z)^B = (2y)^A (2w)^B; both bases
  // are positive, so the principal power is unambiguous.
  Cdd P = cdd_pow_real_base(mul_pwr2(y, 2.0), A) * cdd_pow_real_base(mul_pwr2(w, 2.0), B);

  Cdd F = detail::hyp2f1_split(alpha, beta, gamma, y, w);
  Cdd one{Dd{1.0}};
  Cdd Fd = (alpha * beta / gamma) *
           detail::hyp2f1_split(alpha + one, beta + one, gamma + one, y, w);

  // d/dz ln P = 2wA - 2yB, and dy/dz = 2yw.
  Cdd logP_dz = A * mul_pwr2(w, 2.0) - B * mul_pwr2(y, 2.0);
  Cdd value = P * F;
  Cdd deriv = P * (logP_dz * F + Fd * mul_pwr2(y * w, 2.0));
  return {value, deriv};
}

}  // namespace

AxialSpec axial_spec(int variant, double p, double lambda) {
  if (lambda == 0.0)
    throw Error(errc::degenerate_separation, "axial solutions need lambda != 0");
  complex<double> A, B;
  variant_exponents(variant, p, A, B);
  complex<double> sum = A + B;
  complex<double> il{0.0, lambda};
  HypergeoArgs hyper{sum + il, sum - il, 2.0 * A + 0.5, 0.0};
  return AxialSpec{variant, A, B, hyper, p, lambda};
}

std::complex<double> eval_Z1(const AxialSpec& spec, double z) {
  return to_complex(z1_parts(spec, z).value);
}

std::complex<double> eval_Z1_prime(const AxialSpec& spec, double z) {
  return to_complex(z1_parts(spec, z).deriv);
}

std::complex<double> eval_Z2(const AxialSpec& spec, double z) {
  Z1Parts parts = z1_parts(spec, z);
  Dd chz = dd_cosh(Dd{z});
  Cdd ip{Dd{0.0}, Dd{spec.p}};
  Cdd z2 = (parts.deriv + ip * parts.value) * chz / Dd{spec.lambda};
  return to_complex(z2);
}

AsymptoticClass axial_asymptote(int variant, int direction) {
  if (direction != 1 && direction != -1)
    throw Error(errc::bad_argument, "direction must be +1 or -1");
  complex<double> A, B;
  variant_exponents(variant, 1.0, A, B);  // unit p fixes the signs
  // At z -> +inf the prefactor behaves like e^{-2Bz}; at z -> -inf like
  // e^{+2Az}.  Positive real part means decay; otherwise a plane wave
  // e^{ikz} with k = -2 Im(B) (right end) or k = +2 Im(A) (left end).
  complex<double> e = direction > 0 ? B : A;
  bool decays = e.real() > 0.0;
  int wave_sign = 0;
  if (!decays) {
    double k = direction > 0 ? -2.0 * e.imag() : 2.0 * e.imag();
    wave_sign = k > 0.0 ? 1 : -1;
  }
  return {decays, wave_sign, variant == 2};
}

double axial_argument(double z) { return 1.0 / (1.0 + std::exp(-2.0 * z)); }

}  // namespace h3landau
