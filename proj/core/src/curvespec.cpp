#include "g2rm/curvespec.hpp"

#include <fstream>
#include <sstream>

#include "g2rm/errors.hpp"

namespace g2rm {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

CurveSpecText parse_curve_spec(std::istream& in) {
  CurveSpecText spec;
  bool saw_q = false;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError("BadCurveSpec", "expected 'key = value', got: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "q") {
      spec.q = val;
      saw_q = true;
    } else if (key == "family") {
      if (val != "tautz" && val != "humbert5" && val != "mestre8" && val != "explicit")
        throw InputError("BadCurveSpec", "unknown family: " + val);
      spec.family = val;
    } else if (key == "s") {
      spec.s = val;
    } else if (key == "t") {
      spec.t = val;
    } else if (key == "f") {
      spec.f_coeffs.clear();
      std::stringstream ss(val);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) spec.f_coeffs.push_back(item);
      }
    } else {
      throw InputError("BadCurveSpec", "unknown key: " + key);
    }
  }
  if (!saw_q) throw InputError("BadCurveSpec", "missing key q");
  if (spec.family == "explicit" && spec.f_coeffs.empty())
    throw InputError("BadCurveSpec", "explicit curve needs f");
  return spec;
}

CurveSpecText parse_curve_spec_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_curve_spec(ss);
}

CurveSpecText parse_curve_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("BadCurveSpec", "cannot open " + path);
  return parse_curve_spec(in);
}

std::string serialize_curve_spec(const CurveSpecText& spec) {
  std::ostringstream out;
  out << "q = " << spec.q << "\n";
  out << "family = " << spec.family << "\n";
  if (spec.s) out << "s = " << *spec.s << "\n";
  if (spec.t) out << "t = " << *spec.t << "\n";
  if (!spec.f_coeffs.empty()) {
    out << "f = ";
    for (size_t i = 0; i < spec.f_coeffs.size(); ++i) {
      if (i) out << ",";
      out << spec.f_coeffs[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace g2rm
