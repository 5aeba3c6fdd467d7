// Error taxonomy shared across the library: every precondition violation
// throws Error carrying a stable category tag plus a human-readable message.

#ifndef H3LANDAU_ERRORS_HPP_
#define H3LANDAU_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace h3landau {

enum class errc {
  axis_degeneracy,        // radial coordinate hit r = 0
  subluminal_energy,      // |epsilon| < M, no real axial momentum
  degenerate_separation,  // lambda = 0, the two-channel reduction collapses
  series_no_convergence,  // term cap reached before the sum settled
  gamma_pole,             // hypergeometric gamma parameter at a non-positive integer
  inadmissible_m,         // angular quantum number outside the variant's range
  complex_root,           // quantization would need a complex square root
  level_outside_well,     // level index violates the confinement inequality
  non_terminating,        // polynomial route asked for without a terminating series
  bad_argument,           // generic precondition failure (ranges, formats)
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::axis_degeneracy: return "axis degeneracy";
    case errc::subluminal_energy: return "subluminal energy";
    case errc::degenerate_separation: return "degenerate separation";
    case errc::series_no_convergence: return "series did not converge";
    case errc::gamma_pole: return "gamma pole";
    case errc::inadmissible_m: return "inadmissible m";
    case errc::complex_root: return "complex root";
    case errc::level_outside_well: return "level outside well";
    case errc::non_terminating: return "non-terminating";
    case errc::bad_argument: return "bad argument";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace h3landau

#endif  // H3LANDAU_ERRORS_HPP_
