#ifndef HOMSUM_JSON_IO_HPP
#define HOMSUM_JSON_IO_HPP

#include <json.hpp>

#include "homsum/chain_complex.hpp"
#include "homsum/graded_group.hpp"

namespace homsum {

// JSON encodings. Integer values are decimal strings on output so consumers
// never overflow; integral JSON numbers are accepted on input.
//
//   IntMatrix:    {"rows": R, "cols": C, "entries": ["...", ...]}
//   FgAbGroup:    {"rank": n, "torsion": ["d1", ...]}
//   GradedGroup:  {"0": FgAbGroup, "4": FgAbGroup, ...}   (trivial degrees omitted)
//   ChainComplex: {"top": T, "groups": [g0..gT], "boundaries": [IntMatrix x T]}

nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const FgAbGroup& g);
nlohmann::json to_json(const GradedGroup& g);
nlohmann::json to_json(const ChainComplex& c);

IntMatrix int_matrix_from_json(const nlohmann::json& j);
FgAbGroup fg_ab_group_from_json(const nlohmann::json& j);
GradedGroup graded_group_from_json(const nlohmann::json& j);
ChainComplex chain_complex_from_json(const nlohmann::json& j);

}  // namespace homsum

#endif
