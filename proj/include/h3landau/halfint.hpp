// Half-integer angular quantum number, stored exactly as twice its value.
// The construction and parser enforce oddness: integers are never admitted.

#ifndef H3LANDAU_HALFINT_HPP_
#define H3LANDAU_HALFINT_HPP_

#include <string>

#include "h3landau/errors.hpp"

namespace h3landau {

class HalfInteger {
 public:
  // twice must be odd, e.g. 1 for 1/2, -3 for -3/2.
  explicit HalfInteger(int twice) : twice_(twice) {
    if (twice % 2 == 0)
      throw Error(errc::inadmissible_m,
                  "m must be a half-integer, got " + std::to_string(twice) + "/2");
  }

  // Accepts "p/2" with odd integer p, or a decimal ending in .5 ("1.5", "-0.5").
  static HalfInteger parse(const std::string& text);

  int twice() const { return twice_; }
  double value() const { return 0.5 * twice_; }
  std::string str() const { return std::to_string(twice_) + "/2"; }

  friend bool operator==(HalfInteger a, HalfInteger b) { return a.twice_ == b.twice_; }
  friend bool operator!=(HalfInteger a, HalfInteger b) { return a.twice_ != b.twice_; }
  friend bool operator<(HalfInteger a, HalfInteger b) { return a.twice_ < b.twice_; }

 private:
  int twice_;
};

}  // namespace h3landau

#endif  // H3LANDAU_HALFINT_HPP_
