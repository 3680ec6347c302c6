#pragma once

#include <string>
#include <vector>

#include "qlink/diagram.hpp"
#include "qlink/laurent.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(QLINK_FIXTURES) + "/" + name; }

inline qlink::MorseDiagram load(const std::string& name) { return qlink::load_morse_file(fixture(name)); }

inline const std::vector<std::string>& closed_fixtures() {
  static const std::vector<std::string> names = {"unknot_ccw.morse",   "unknot_cw.morse",    "hopf_pos.morse",
                                                 "hopf_neg.morse",     "trefoil_pos.morse",  "trefoil_neg.morse",
                                                 "figure_eight.morse"};
  return names;
}

inline const std::vector<std::string>& knot_fixtures() {
  static const std::vector<std::string> names = {"unknot_ccw.morse", "unknot_cw.morse", "trefoil_pos.morse",
                                                 "trefoil_neg.morse", "figure_eight.morse"};
  return names;
}

inline qlink::LaurentPoly q(std::int64_t k) { return qlink::LaurentPoly::monomial(1, k); }

}  // namespace testing
