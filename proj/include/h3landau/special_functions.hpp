// Gauss hypergeometric evaluators.  Two public routes: the convergent series
// on |x| < 1 and the terminating polynomial valid for any real x.  Both are
// summed in double-double internally so that downstream finite-difference
// residual checks see full double-precision values.

#ifndef H3LANDAU_SPECIAL_FUNCTIONS_HPP_
#define H3LANDAU_SPECIAL_FUNCTIONS_HPP_

#include <complex>

#include "h3landau/dd.hpp"
#include "h3landau/errors.hpp"

namespace h3landau {

struct HypergeoArgs {
  std::complex<double> alpha;
  std::complex<double> beta;
  std::complex<double> gamma;
  double x = 0.0;
};

struct SeriesOptions {
  double tolerance = 1e-14;   // stop once |term| <= tolerance * max(1, |sum|)
  long max_terms = 1000000;   // cap before declaring non-convergence
};

// Sum of the Gauss series on |x| < 1.  Throws "gamma pole" when gamma is a
// non-positive integer that the series reaches before terminating, and
// "series did not converge" at the term cap.
std::complex<double> gauss_2f1_series(const HypergeoArgs& args,
                                      const SeriesOptions& opts = {});

// Terminating case F(-n, beta; gamma; x): an exact (n+1)-term polynomial,
// legal for any real x.  Throws "gamma pole" if gamma ∈ {0, -1, ..., -(n-1)}.
std::complex<double> gauss_2f1_polynomial(int degree_n, std::complex<double> beta,
                                          std::complex<double> gamma, double x);

// Internal full-precision engine used by the solver modules.  The split
// evaluator switches to the 1-x connection form near the right endpoint,
// which needs the complex gamma function; both are exposed for tests.
namespace detail {

// Complex gamma function in double-double precision (Spouge expansion).
Cdd gamma_cdd(Cdd z);

// Direct series sum; requires |x| < 1 with margin.  rel_tol is relative to
// the running partial sum.  Throws "series did not converge" at the cap.
Cdd hyp2f1_series_dd(Cdd a, Cdd b, Cdd c, Dd x, double rel_tol = 5e-17,
                     long max_terms = 2000000);

// F(a,b;c;y) for y in (0,1) given both y and 1-y to full accuracy.  Uses the
// direct series for y <= 0.75 and the two-term connection at 1-y otherwise;
// callers guarantee c-a-b is not an integer on the connection path (the
// axial family has Re(c-a-b) = ±1/2), and a non-integer fallback check
// reverts to the direct series if that ever fails.
Cdd hyp2f1_split(Cdd a, Cdd b, Cdd c, Dd y, Dd one_minus_y);

// Terminating polynomial in double-double, real or complex parameters.
Cdd hyp2f1_polynomial_dd(int degree_n, Cdd beta, Cdd gamma, Dd x);

}  // namespace detail

}  // namespace h3landau

#endif  // H3LANDAU_SPECIAL_FUNCTIONS_HPP_
