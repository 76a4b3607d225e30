#include "orthoq/json_io.hpp"

#include <sstream>

#include "orthoq/error.hpp"

namespace orthoq {

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw ParseError(std::string("malformed JSON: ") + err.what());
    }
}

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string, got " + j.dump());
}

Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a list of rationals, got " + j.dump());
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

Polynomial polynomial_from_json(const Json& j) { return Polynomial(rationals_from_json(j)); }

Json to_json(const Lattice& lattice) {
    if (lattice.is_q()) {
        return Json{{"kind", "q"},
                    {"c1", to_json(lattice.c1())},
                    {"c2", to_json(lattice.c2())},
                    {"c3", to_json(lattice.c3())},
                    {"p", to_json(lattice.p())}};
    }
    return Json{
        {"kind", "quadratic"}, {"c4", to_json(lattice.c4())}, {"c5", to_json(lattice.c5())}, {"c6", to_json(lattice.c6())}};
}

namespace {

Rational field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("lattice is missing '") + key + "'");
    return rational_from_json(j.at(key));
}

}  // namespace

Lattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("lattice must be an object with a \"kind\" string");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "q") return Lattice::q_quadratic(field(j, "c1"), field(j, "c2"), field(j, "c3"), field(j, "p"));
    if (kind == "quadratic") return Lattice::quadratic(field(j, "c4"), field(j, "c5"), field(j, "c6"));
    throw ParseError("unknown lattice kind '" + kind + "'");
}

Json to_json(const FamilyTag& tag) {
    Json params = Json::array();
    for (const auto& v : tag.params) params.push_back(to_json(v));
    return Json{{"family", std::string(family_name(tag.family))}, {"params", params}, {"u", to_json(tag.u)}};
}

Json to_json(const Window& window) {
    Json out = Json::object();
    for (const auto& [j, v] : window) out[std::to_string(j)] = to_json(v);
    return out;
}

Json to_json(const CoefficientReport& report) {
    Json out{{"n", report.n}, {"window", to_json(report.window)}, {"residual_zero", report.residual_zero()}};
    if (report.closed_form_match) out["closed_form_match"] = *report.closed_form_match;
    return out;
}

std::string window_to_csv(const Window& window) {
    std::string out = "offset,value\n";
    for (const auto& [j, v] : window) out += std::to_string(j) + "," + to_string(v) + "\n";
    return out;
}

Window window_from_csv(std::string_view csv) {
    std::istringstream in{std::string(csv)};
    std::string line;
    if (!std::getline(in, line) || line.rfind("offset,value", 0) != 0) throw ParseError("csv window needs an offset,value header");
    Window out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("malformed csv row '" + line + "'");
        const auto rest = line.substr(comma + 1);
        const auto value = rest.substr(0, rest.find(','));
        int offset = 0;
        try {
            offset = std::stoi(line.substr(0, comma));
        } catch (const std::exception&) {
            throw ParseError("malformed csv offset in '" + line + "'");
        }
        out[offset] = parse_rational(value);
    }
    return out;
}

}  // namespace orthoq
