#pragma once

#include <string>

#include "yangian/series.hpp"

#include <json.hpp>

namespace yang {

// JSON layout for an element:
//   {"p": 3, "n": 2, "terms": [{"coeff": 2, "monomial":
//       [{"i": 1, "j": 2, "r": 1, "e": 2}, ...]}, ...]}
// Terms appear in the element's canonical monomial order; consecutive equal
// generators are compressed into one entry with exponent e. The current
// algebra uses the same layout with symbol "e" in the text form.
nlohmann::json element_to_json(const Element& a);
nlohmann::json element_to_json(const UgElement& a);
Element element_from_json(const nlohmann::json& j);
Element element_from_json(const nlohmann::json& j, const Ctx& cx);
UgElement ug_element_from_json(const nlohmann::json& j);
UgElement ug_element_from_json(const nlohmann::json& j, const Ctx& cx);

// Text form: "2 * T[1,2,1]^2 * T[2,2,3] + 1" with terms joined by " + ";
// the zero element prints as "0".
std::string element_to_text(const Element& a);
std::string element_to_text(const UgElement& a);
Element element_from_text(const std::string& s, const Ctx& cx);
UgElement ug_element_from_text(const std::string& s, const Ctx& cx);

// JSON layout for a series: {"trunc": N, "coeffs": {"0": <element>, ...}};
// zero coefficients are omitted.
nlohmann::json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);
Series series_from_json(const nlohmann::json& j, const Ctx& cx);

}  // namespace yang
