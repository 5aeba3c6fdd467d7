// Double-double arithmetic: ~31 significant decimal digits from unevaluated
// pairs of IEEE doubles.  Classic error-free transformations (Dekker splitting,
// Knuth two-sum) plus the transcendental kit needed by the solvers: exp, log,
// sin/cos, atan2, sinh/cosh, pow, and a complex layer with exp/log/pow.
//
// Build note: requires -ffp-contract=off (or equivalent); fused multiply-adds
// introduced by the compiler break the error-free transforms.

#ifndef H3LANDAU_DD_HPP_
#define H3LANDAU_DD_HPP_

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>

namespace h3landau {

struct Dd {
  double hi = 0.0;
  double lo = 0.0;

  constexpr Dd() = default;
  constexpr Dd(double h) : hi(h), lo(0.0) {}
  constexpr Dd(double h, double l) : hi(h), lo(l) {}
};

namespace detail {

// s + err == a + b exactly, |err| <= ulp(s)/2, no assumption on |a| vs |b|.
inline Dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

// Same as two_sum but requires |a| >= |b|.
inline Dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

// Dekker split: a == x + y with x, y each holding <= 27 significant bits.
inline void split(double a, double& x, double& y) {
  constexpr double splitter = 134217729.0;  // 2^27 + 1
  double t = splitter * a;
  x = t - (t - a);
  y = a - x;
}

// p + err == a * b exactly.
inline Dd two_prod(double a, double b) {
#if defined(FP_FAST_FMA)
  double p = a * b;
  return {p, std::fma(a, b, -p)};
#else
  double p = a * b;
  double a_hi, a_lo, b_hi, b_lo;
  split(a, a_hi, a_lo);
  split(b, b_hi, b_lo);
  double err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo;
  return {p, err};
#endif
}

}  // namespace detail

inline Dd operator+(Dd a, Dd b) {
  Dd s = detail::two_sum(a.hi, b.hi);
  Dd t = detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline Dd operator+(Dd a, double b) {
  Dd s = detail::two_sum(a.hi, b);
  s.lo += a.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline Dd operator+(double a, Dd b) { return b + a; }

inline Dd operator-(Dd a) { return {-a.hi, -a.lo}; }
inline Dd operator-(Dd a, Dd b) { return a + Dd{-b.hi, -b.lo}; }
inline Dd operator-(Dd a, double b) { return a + (-b); }
inline Dd operator-(double a, Dd b) { return Dd{a} + (-b); }

inline Dd operator*(Dd a, Dd b) {
  Dd p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline Dd operator*(Dd a, double b) {
  Dd p = detail::two_prod(a.hi, b);
  p.lo += a.lo * b;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline Dd operator*(double a, Dd b) { return b * a; }

// Long division with two correction passes.
inline Dd operator/(Dd a, Dd b) {
  double q1 = a.hi / b.hi;
  Dd r = a - b * q1;
  double q2 = r.hi / b.hi;
  r = r - b * q2;
  double q3 = r.hi / b.hi;
  Dd q = detail::quick_two_sum(q1, q2);
  return q + q3;
}

inline Dd operator/(Dd a, double b) { return a / Dd{b}; }
inline Dd operator/(double a, Dd b) { return Dd{a} / b; }

inline Dd& operator+=(Dd& a, Dd b) { return a = a + b; }
inline Dd& operator-=(Dd& a, Dd b) { return a = a - b; }
inline Dd& operator*=(Dd& a, Dd b) { return a = a * b; }
inline Dd& operator/=(Dd& a, Dd b) { return a = a / b; }

inline bool operator<(Dd a, Dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(Dd a, Dd b) { return b < a; }
inline bool operator==(Dd a, Dd b) { return a.hi == b.hi && a.lo == b.lo; }

inline double to_double(Dd a) { return a.hi + a.lo; }
inline Dd dd_abs(Dd a) { return a.hi < 0.0 ? -a : a; }

// Multiply by an exact power of two (both legs scale exactly).
inline Dd mul_pwr2(Dd a, double p2) { return {a.hi * p2, a.lo * p2}; }

namespace dd_const {
inline constexpr Dd pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr Dd two_pi{6.283185307179586232e+00, 2.449293598294706414e-16};
inline constexpr Dd half_pi{1.570796326794896558e+00, 6.123233995736766036e-17};
inline constexpr Dd ln2{6.931471805599452862e-01, 2.319046813846299558e-17};
}  // namespace dd_const

inline Dd dd_sqrt(Dd a) {
  if (a.hi == 0.0) return {0.0, 0.0};
  // One Newton step on x = sqrt(a) starting from the double estimate:
  // x <- x + (a - x^2) / (2 x), accurate to full dd precision.
  double x = std::sqrt(a.hi);
  Dd r = (a - Dd{x} * Dd{x}) / (2.0 * x);
  return Dd{x} + r;
}

// Integer power by binary decomposition.
inline Dd dd_npow(Dd a, int n) {
  if (n == 0) return {1.0, 0.0};
  bool inv = n < 0;
  unsigned long k = inv ? -static_cast<long>(n) : n;
  Dd base = a, acc{1.0, 0.0};
  while (k) {
    if (k & 1UL) acc = acc * base;
    base = base * base;
    k >>= 1UL;
  }
  return inv ? Dd{1.0} / acc : acc;
}

inline Dd dd_exp(Dd a) {
  if (a.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
  if (a.hi < -709.0) return {0.0, 0.0};
  double k = std::nearbyint(a.hi / dd_const::ln2.hi);
  Dd r = a - dd_const::ln2 * k;  // |r| <= ln2/2
  // Taylor series of exp(r); terms fall below 1e-35 within ~26 iterations.
  Dd sum = Dd{1.0} + r;
  Dd term = r;
  for (int i = 2; i < 32; ++i) {
    term = term * r / static_cast<double>(i);
    sum += term;
    if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi)) break;
  }
  return mul_pwr2(sum, std::ldexp(1.0, static_cast<int>(k)));
}

inline Dd dd_log(Dd a) {
  // Newton iteration on exp(y) = a seeded by the double log; two steps leave
  // the error far below dd resolution.
  Dd y{std::log(a.hi)};
  for (int i = 0; i < 2; ++i) y = y + a * dd_exp(-y) - 1.0;
  return y;
}

inline void dd_sincos_taylor(Dd r, Dd& s, Dd& c) {
  // |r| <= pi/4.  Plain Taylor for both series.
  Dd r2 = r * r;
  Dd term = r;
  s = r;
  for (int i = 3; i < 36; i += 2) {
    term = term * r2 / static_cast<double>(i * (i - 1));
    term = -term;
    s += term;
    if (std::fabs(term.hi) < 1e-35) break;
  }
  term = Dd{1.0};
  c = Dd{1.0};
  for (int i = 2; i < 36; i += 2) {
    term = term * r2 / static_cast<double>(i * (i - 1));
    term = -term;
    c += term;
    if (std::fabs(term.hi) < 1e-35) break;
  }
}

inline void dd_sincos(Dd a, Dd& s, Dd& c) {
  // Reduce modulo pi/2.  Callers stay within |a| ~ few hundred, where the
  // dd representation of pi/2 keeps the reduction error below 1e-29.
  double q = std::nearbyint(to_double(a) / dd_const::half_pi.hi);
  Dd r = a - dd_const::half_pi * q;
  Dd sr, cr;
  dd_sincos_taylor(r, sr, cr);
  // Two's-complement & maps negative quotients to the right quadrant too.
  switch (static_cast<long long>(q) & 3LL) {
    case 0: s = sr; c = cr; break;
    case 1: s = cr; c = -sr; break;
    case 2: s = -sr; c = -cr; break;
    default: s = -cr; c = sr; break;
  }
}

inline Dd dd_sin(Dd a) { Dd s, c; dd_sincos(a, s, c); return s; }
inline Dd dd_cos(Dd a) { Dd s, c; dd_sincos(a, s, c); return c; }

inline Dd dd_atan2(Dd y, Dd x) {
  // Newton refinement of the double seed on sin/cos; two passes suffice.
  Dd th{std::atan2(to_double(y), to_double(x))};
  Dd r = dd_sqrt(x * x + y * y);
  for (int i = 0; i < 2; ++i) {
    Dd s, c;
    dd_sincos(th, s, c);
    th = th + (y * c - x * s) / r;
  }
  return th;
}

inline Dd dd_cosh(Dd a) {
  Dd e = dd_exp(a);
  return mul_pwr2(e + Dd{1.0} / e, 0.5);
}

inline Dd dd_sinh(Dd a) {
  if (std::fabs(a.hi) > 0.05) {
    Dd e = dd_exp(a);
    return mul_pwr2(e - Dd{1.0} / e, 0.5);
  }
  // Small arguments: Taylor to dodge cancellation in (e - 1/e).
  Dd term = a, sum = a, a2 = a * a;
  for (int i = 3; i < 20; i += 2) {
    term = term * a2 / static_cast<double>(i * (i - 1));
    sum += term;
    if (std::fabs(term.hi) < 1e-35) break;
  }
  return sum;
}

inline Dd dd_tanh(Dd a) { return dd_sinh(a) / dd_cosh(a); }

// a^b for a > 0.
inline Dd dd_pow(Dd a, Dd b) { return dd_exp(b * dd_log(a)); }

// ---------------------------------------------------------------------------
// Complex double-double.

struct Cdd {
  Dd re, im;

  Cdd() = default;
  Cdd(Dd r) : re(r), im(0.0) {}
  Cdd(Dd r, Dd i) : re(r), im(i) {}
  Cdd(double r) : re(r), im(0.0) {}
  Cdd(std::complex<double> z) : re(z.real()), im(z.imag()) {}
};

inline Cdd operator+(Cdd a, Cdd b) { return {a.re + b.re, a.im + b.im}; }
inline Cdd operator-(Cdd a, Cdd b) { return {a.re - b.re, a.im - b.im}; }
inline Cdd operator-(Cdd a) { return {-a.re, -a.im}; }

inline Cdd operator*(Cdd a, Cdd b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline Cdd operator*(Cdd a, Dd b) { return {a.re * b, a.im * b}; }
inline Cdd operator*(Dd a, Cdd b) { return b * a; }
inline Cdd operator*(Cdd a, double b) { return {a.re * b, a.im * b}; }

inline Dd cdd_norm(Cdd a) { return a.re * a.re + a.im * a.im; }
inline Cdd cdd_conj(Cdd a) { return {a.re, -a.im}; }

inline Cdd operator/(Cdd a, Cdd b) {
  Dd n = cdd_norm(b);
  Cdd num = a * cdd_conj(b);
  return {num.re / n, num.im / n};
}

inline Cdd operator/(Cdd a, Dd b) { return {a.re / b, a.im / b}; }
inline Cdd operator/(Cdd a, double b) { return {a.re / Dd{b}, a.im / Dd{b}}; }

inline Cdd& operator+=(Cdd& a, Cdd b) { return a = a + b; }
inline Cdd& operator*=(Cdd& a, Cdd b) { return a = a * b; }

inline std::complex<double> to_complex(Cdd a) {
  return {to_double(a.re), to_double(a.im)};
}

// Cheap magnitude estimate (double precision), for convergence tests only.
inline double cdd_abs_est(Cdd a) { return std::hypot(a.re.hi, a.im.hi); }

inline Cdd cdd_exp(Cdd a) {
  Dd m = dd_exp(a.re);
  Dd s, c;
  dd_sincos(a.im, s, c);
  return {m * c, m * s};
}

inline Cdd cdd_log(Cdd a) {
  return {mul_pwr2(dd_log(cdd_norm(a)), 0.5), dd_atan2(a.im, a.re)};
}

// a^b with a real and positive: the branch question never arises.
inline Cdd cdd_pow_real_base(Dd a, Cdd b) { return cdd_exp(b * Dd{dd_log(a)}); }

}  // namespace h3landau

#endif  // H3LANDAU_DD_HPP_
