#pragma once

// Internal JSON glue. nlohmann/json stays private to the core sources; the
// public API trades in std::string only.

#include <string>
#include <string_view>

#include <json.hpp>

#include "kleinian/errors.hpp"
#include "kleinian/field.hpp"
#include "kleinian/moebius.hpp"

namespace kleinian::detail {

using Json = nlohmann::ordered_json;

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what(), 0);
    }
}

inline Json element_to_json(const FieldElement& a) {
    Json j;
    j["one"] = rational_str(a.one_coord());
    j["i"] = rational_str(a.i_coord());
    j["sqrt2"] = rational_str(a.sqrt2_coord());
    j["isqrt2"] = rational_str(a.isqrt2_coord());
    return j;
}

inline FieldElement element_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("element JSON must be an object", 0);
    auto coord = [&](const char* key) {
        if (!j.contains(key) || !j.at(key).is_string())
            throw ParseError(std::string("element JSON missing string field '") + key + "'", 0);
        return parse_rational(j.at(key).get<std::string>());
    };
    return {coord("one"), coord("i"), coord("sqrt2"), coord("isqrt2")};
}

inline Json matrix_to_json(const Matrix& m) {
    Json j;
    j["a"] = element_to_json(m.a());
    j["b"] = element_to_json(m.b());
    j["c"] = element_to_json(m.c());
    j["d"] = element_to_json(m.d());
    return j;
}

inline Matrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("matrix JSON must be an object", 0);
    auto entry = [&](const char* key) {
        if (!j.contains(key))
            throw ParseError(std::string("matrix JSON missing field '") + key + "'", 0);
        return element_from_json(j.at(key));
    };
    return {entry("a"), entry("b"), entry("c"), entry("d")};
}

}  // namespace kleinian::detail
