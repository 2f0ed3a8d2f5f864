#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "mplanes/g12.hpp"
#include "mplanes/g2.hpp"
#include "mplanes/hyperbolic.hpp"
#include "mplanes/matrix_rep.hpp"

namespace mplanes {

// Shortest decimal form that reads back to the same double; '.' decimal
// point regardless of locale.
std::string format_number(double x);

// Text forms: "a + b e1 + c e2 + d e12", "x + y u", "c0 + c1 g0 + ... + c7 g012".
// Zero terms are omitted and the zero element prints as "0". Readers ignore
// whitespace, accept an optional '*' between coefficient and basis name and
// a bare basis name for coefficient 1. Because whitespace is ignored, an
// exponent directly followed by a basis name needs an explicit sign:
// "2e1" is 2 e1 while "2e+1" is 20.
std::string format_g2(const G2Multivector& g);
std::string format_g12(const G12Multivector& f);
std::string format_hyperbolic(const HyperbolicNumber& w);

// Each reader also accepts the JSON form when the input starts with '{'.
// Throws ParseError.
G2Multivector parse_g2(std::string_view text);
G12Multivector parse_g12(std::string_view text);
HyperbolicNumber parse_hyperbolic(std::string_view text);

// True when the text names a G12 basis element (g0, g01, ...) or is a
// JSON object with G12 keys.
bool looks_like_g12(std::string_view text);

void to_json(nlohmann::json& j, const G2Multivector& g);
void from_json(const nlohmann::json& j, G2Multivector& g);
void to_json(nlohmann::json& j, const G12Multivector& f);
void from_json(const nlohmann::json& j, G12Multivector& f);
void to_json(nlohmann::json& j, const HyperbolicNumber& w);
void from_json(const nlohmann::json& j, HyperbolicNumber& w);
void to_json(nlohmann::json& j, const Vector2& v);
void to_json(nlohmann::json& j, const MinkowskiVector& x);
void to_json(nlohmann::json& j, const Mat2& m);
void from_json(const nlohmann::json& j, Mat2& m);
void to_json(nlohmann::json& j, const Mat2Complexified& m);
void from_json(const nlohmann::json& j, Mat2Complexified& m);

}  // namespace mplanes
