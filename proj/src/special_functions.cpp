#include "h3landau/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

namespace h3landau {

namespace {

// True when z is a non-positive integer (exact, as doubles).
bool is_nonpositive_integer(std::complex<double> z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real());
}

// Degree at which the series terminates: smallest n with (alpha)_{n+1} = 0,
// or -1 if it never does.
long termination_degree(std::complex<double> alpha, std::complex<double> beta) {
  long n = -1;
  if (is_nonpositive_integer(alpha)) n = static_cast<long>(-alpha.real());
  if (is_nonpositive_integer(beta)) {
    long nb = static_cast<long>(-beta.real());
    if (n < 0 || nb < n) n = nb;
  }
  return n;
}

std::string complex_str(std::complex<double> z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

}  // namespace

namespace detail {

Cdd hyp2f1_series_dd(Cdd a, Cdd b, Cdd c, Dd x, double rel_tol, long max_terms) {
  Cdd sum{Dd{1.0}};
  Cdd term{Dd{1.0}};
  int small_streak = 0;
  for (long k = 0; k < max_terms; ++k) {
    double kd = static_cast<double>(k);
    Cdd num = (a + Cdd{Dd{kd}}) * (b + Cdd{Dd{kd}});
    // Exact termination; checked before dividing so that a Pochhammer zero in
    // the denominator at the same index cannot produce 0/0.
    if (num.re.hi == 0.0 && num.im.hi == 0.0) return sum;
    Cdd den = (c + Cdd{Dd{kd}}) * Cdd{Dd{kd + 1.0}};
    term = term * num / den * x;
    sum += term;
    if (term.re.hi == 0.0 && term.im.hi == 0.0) return sum;
    if (cdd_abs_est(term) <= rel_tol * std::max(1.0, cdd_abs_est(sum))) {
      // Two consecutive small terms guard against the dips that occur when a
      // parameter sits close to a negative integer.
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw Error(errc::series_no_convergence,
              "hypergeometric series still above tolerance after " +
                  std::to_string(max_terms) + " terms at x = " + std::to_string(to_double(x)));
}

Cdd gamma_cdd(Cdd z) {
  constexpr int a = 32;
  // Spouge coefficients in double-double, built once.
  static const std::array<Dd, a> coeff = [] {
    std::array<Dd, a> c{};
    c[0] = dd_sqrt(mul_pwr2(dd_const::pi, 2.0));  // sqrt(2 pi)
    Dd factorial{1.0};
    for (int k = 1; k < a; ++k) {
      if (k > 1) factorial = factorial * static_cast<double>(k - 1);
      Dd ak{static_cast<double>(a - k)};
      Dd mag = dd_exp((Dd{static_cast<double>(k)} - 0.5) * dd_log(ak) + ak) / factorial;
      c[k] = (k % 2 == 1) ? mag : -mag;
    }
    return c;
  }();

  // Lift to Re(z) >= 1 with the recurrence gamma(z) = gamma(z+1)/z.
  Cdd shift{Dd{1.0}};
  while (z.re.hi < 1.0) {
    shift = shift * z;
    z = z + Cdd{Dd{1.0}};
  }

  Cdd zm1 = z - Cdd{Dd{1.0}};
  Cdd sum{coeff[0]};
  for (int k = 1; k < a; ++k) sum += Cdd{coeff[k]} / (zm1 + Cdd{Dd{static_cast<double>(k)}});
  Cdd base = zm1 + Cdd{Dd{static_cast<double>(a)}};
  Cdd expo = (zm1 + Cdd{Dd{0.5}}) * cdd_log(base) - base;
  return cdd_exp(expo) * sum / shift;
}

Cdd hyp2f1_split(Cdd a, Cdd b, Cdd c, Dd y, Dd w) {
  if (y.hi <= 0.75) return hyp2f1_series_dd(a, b, c, y);

  Cdd d = c - a - b;
  double d_re = to_double(d.re);
  bool d_near_integer =
      std::fabs(to_double(d.im)) < 1e-12 && std::fabs(d_re - std::nearbyint(d_re)) < 1e-9;
  if (d_near_integer) {
    // Degenerate connection coefficients; fall back to the (slow) direct sum.
    return hyp2f1_series_dd(a, b, c, y);
  }

  // F(a,b;c;y) = G1 * F(a,b;a+b-c+1;w) + G2 * w^d * F(c-a,c-b;d+1;w),  w = 1-y.
  Cdd one{Dd{1.0}};
  Cdd g_c = gamma_cdd(c);
  Cdd g1 = g_c * gamma_cdd(d) / (gamma_cdd(c - a) * gamma_cdd(c - b));
  Cdd g2 = g_c * gamma_cdd(-d) / (gamma_cdd(a) * gamma_cdd(b));
  Cdd f1 = hyp2f1_series_dd(a, b, a + b - c + one, w);
  Cdd f2 = hyp2f1_series_dd(c - a, c - b, d + one, w);
  return g1 * f1 + g2 * cdd_pow_real_base(w, d) * f2;
}

Cdd hyp2f1_polynomial_dd(int degree_n, Cdd beta, Cdd gamma, Dd x) {
  Cdd sum{Dd{1.0}};
  Cdd term{Dd{1.0}};
  for (int k = 0; k < degree_n; ++k) {
    double kd = static_cast<double>(k);
    Cdd num = Cdd{Dd{kd - degree_n}} * (beta + Cdd{Dd{kd}});
    Cdd den = (gamma + Cdd{Dd{kd}}) * Cdd{Dd{kd + 1.0}};
    term = term * num / den * x;
    sum += term;
  }
  return sum;
}

}  // namespace detail

std::complex<double> gauss_2f1_series(const HypergeoArgs& args, const SeriesOptions& opts) {
  if (!(std::fabs(args.x) < 1.0))
    throw Error(errc::bad_argument,
                "series evaluator requires |x| < 1, got x = " + std::to_string(args.x));

  if (is_nonpositive_integer(args.gamma)) {
    // Legal only when the series terminates before the vanishing Pochhammer
    // factor enters a denominator, i.e. degree <= -gamma.
    long n = termination_degree(args.alpha, args.beta);
    long pole_margin = static_cast<long>(-args.gamma.real());
    if (n < 0 || n > pole_margin)
      throw Error(errc::gamma_pole, "gamma = " + complex_str(args.gamma) +
                                        " is a non-positive integer inside the summation range");
  }

  Cdd value = detail::hyp2f1_series_dd(Cdd{args.alpha}, Cdd{args.beta}, Cdd{args.gamma},
                                       Dd{args.x}, opts.tolerance, opts.max_terms);
  return to_complex(value);
}

std::complex<double> gauss_2f1_polynomial(int degree_n, std::complex<double> beta,
                                          std::complex<double> gamma, double x) {
  if (degree_n < 0)
    throw Error(errc::bad_argument, "polynomial degree must be non-negative, got " +
                                        std::to_string(degree_n));
  if (is_nonpositive_integer(gamma) && -gamma.real() < static_cast<double>(degree_n))
    throw Error(errc::gamma_pole, "gamma = " + complex_str(gamma) +
                                      " hits a pole within degree " + std::to_string(degree_n));
  Cdd value = detail::hyp2f1_polynomial_dd(degree_n, Cdd{beta}, Cdd{gamma}, Dd{x});
  return to_complex(value);
}

}  // namespace h3landau
