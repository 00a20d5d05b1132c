#ifndef G2RM_CURVESPEC_HPP
#define G2RM_CURVESPEC_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace g2rm {

// Textual curve description, shared between the CLI and tests.
//
//   q = 1009
//   family = tautz            # tautz | humbert5 | mestre8 | explicit
//   t = 7                     # families: t, or s and t
//   # explicit curves instead give f, low-to-high coefficients:
//   # f = 1,0,0,0,0,1
//
// '#' starts a comment; keys are case-sensitive; values are decimal.
struct CurveSpecText {
  std::string q;
  std::string family = "explicit";
  std::optional<std::string> s;
  std::optional<std::string> t;
  std::vector<std::string> f_coeffs;  // low to high
};

CurveSpecText parse_curve_spec(std::istream& in);
CurveSpecText parse_curve_spec_string(const std::string& text);
CurveSpecText parse_curve_spec_file(const std::string& path);

std::string serialize_curve_spec(const CurveSpecText& spec);

}  // namespace g2rm

#endif  // G2RM_CURVESPEC_HPP
