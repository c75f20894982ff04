#pragma once

// JSON forms of polynomials, operators and reports.
//   polynomial: {"vars": ["t"] | ["t","M"] | ["M"], "terms": [[exp..., "coef"], ...]}
//   operator:   {"op": [[L_exp, polynomial], ...]}
// Coefficients are decimal strings (rationals as "p/q"); terms ascend.

#include <json.hpp>

#include "ajcable/apoly.hpp"
#include "ajcable/laurent2.hpp"
#include "ajcable/qtorus.hpp"
#include "ajcable/recurrence.hpp"

namespace ajcable {

using json = nlohmann::ordered_json;

json to_json(const LaurentPoly1& p);
// Rational coefficients in the variable `var`.
json to_json(const LaurentQ& p, const std::string& var = "M");
json to_json(const LaurentPoly2& p);
json to_json(const QTorusOperator& op);
json to_json(const CommutativeMLPoly& p);
json to_json(const AnnihilatorCertificate& cert);
json to_json(const AJReport& report);

LaurentPoly1 poly1_from_json(const json& j);
LaurentPoly2 poly2_from_json(const json& j);
QTorusOperator operator_from_json(const json& j);

}  // namespace ajcable
