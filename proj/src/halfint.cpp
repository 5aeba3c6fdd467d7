#include "h3landau/halfint.hpp"

#include <cctype>
#include <cstdlib>

namespace h3landau {

namespace {

bool parse_int(const std::string& s, long& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtol(s.c_str(), &end, 10);
  return end == s.c_str() + s.size();
}

}  // namespace

HalfInteger HalfInteger::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(errc::inadmissible_m, "empty m value");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long num = 0, den = 0;
    if (!parse_int(s.substr(0, slash), num) || !parse_int(s.substr(slash + 1), den) || den != 2)
      throw Error(errc::inadmissible_m,
                  "m must be an odd-numerator half ('p/2') or a decimal ending in .5, got '" +
                      text + "'");
    return HalfInteger(static_cast<int>(num));
  }

  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size())
    throw Error(errc::inadmissible_m, "cannot parse m value '" + text + "'");
  double twice = 2.0 * v;
  if (twice != static_cast<double>(static_cast<long long>(twice)))
    throw Error(errc::inadmissible_m, "m = " + text + " is not a half-integer");
  return HalfInteger(static_cast<int>(twice));  // constructor rejects even values
}

}  // namespace h3landau
