#pragma once

#include <json.hpp>

#include "symfrac/newton_engine.hpp"
#include "symfrac/subalgebra_lab.hpp"
#include "symfrac/trace_charpoly.hpp"

namespace symfrac {

using json = nlohmann::json;

// Coefficients are strings in canonical form ("2", "-3/4"); rings are "Z",
// "Q" or "F5". Partitions are arrays of parts in decreasing order.
//
//   MPoly        {"ring", "n", "terms": [{"coeff", "exponents": [..]}]}
//   EExpansion   {"ring", "n", "terms": [{"coeff", "e": [partition]}]}
//   PPoly        [{"coeff", "p": [partition]}]
//   PRat         {"ring", "num": PPoly, "den": PPoly, "text"}
//   EFormula     {"k", "n", "ring", "num", "den", "verified", "route",
//                 "denominator", "text", "mixed": {"num", "den", "offset", "text"}}
//   CharPoly     {"ring", "coeffs": [c_0 .. c_n], "provenance": {"e1": ..},
//                 "warnings": [..], "text"}
//   Membership   {"member", "certificate": [{"coeff", "p": [partition]}],
//                 "spanning_dimension", "slice_dimension", "failing_degrees"}
// Readers ignore "text" and "verified", and throw ParseError on malformed input.

json to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);

json to_json(const EExpansion& e);
EExpansion eexpansion_from_json(const json& j);

json ppoly_to_json(const PPoly& p);
PPoly ppoly_from_json(const json& j, const RingSpec& ring);

json to_json(const PRat& a);
PRat prat_from_json(const json& j);

json to_json(const EFormula& f, std::optional<bool> verified = std::nullopt);
EFormula eformula_from_json(const json& j);

json to_json(const CharPoly& ch);
CharPoly charpoly_from_json(const json& j);

json to_json(const MembershipAnswer& a);
MembershipAnswer membership_from_json(const json& j, const RingSpec& ring);

/// Dense square matrix given as a 2-D array of coefficient strings or integers.
Matrix<Coeff> matrix_from_json(const json& j, const RingSpec& ring);

}  // namespace symfrac
