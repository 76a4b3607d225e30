#ifndef ORTHOQ_JSON_IO_HPP
#define ORTHOQ_JSON_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "orthoq/bochner.hpp"
#include "orthoq/structure.hpp"

namespace orthoq {

using Json = nlohmann::ordered_json;

/// Throws ParseError with the parser's message.
Json parse_json(std::string_view text);

Json to_json(const Rational& value);
/// Accepts "num/den" strings and JSON integers.
Rational rational_from_json(const Json& j);

/// Coefficient list, constant term first.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
std::vector<Rational> rationals_from_json(const Json& j);

/// {"kind":"q","c1":..,"c2":..,"c3":..,"p":..} or {"kind":"quadratic","c4":..,"c5":..,"c6":..}.
Json to_json(const Lattice& lattice);
Lattice lattice_from_json(const Json& j);

Json to_json(const FamilyTag& tag);
Json to_json(const Window& window);
/// {"n":..,"window":{..},"residual_zero":..,"closed_form_match":..}; the last
/// key only when a closed form exists.
Json to_json(const CoefficientReport& report);

/// offset,value rows under a header line.
std::string window_to_csv(const Window& window);
Window window_from_csv(std::string_view csv);

}  // namespace orthoq

#endif  // ORTHOQ_JSON_IO_HPP
