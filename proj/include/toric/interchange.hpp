#pragma once

// JSON interchange documents. Integers are JSON numbers, or decimal strings
// when they do not fit in 64 bits; rationals are always strings "p" or "p/q".
// Structural problems raise ParseError naming the JSON pointer at fault.

#include "toric/derivation.hpp"
#include "toric/error.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace toric::io {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text);

Integer parse_integer(const Json& j, const std::string& where);
Rational parse_rational(const Json& j, const std::string& where);
IntVector parse_int_vector(const Json& j, const std::string& where, std::optional<std::size_t> length = {});
RatVector parse_rat_vector(const Json& j, const std::string& where, std::size_t length);

Json to_json(const Integer& x);
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const GroupElement& m);
Json to_json(const DualVector& u);
Json to_json(const AlgebraElement& f);
Json to_json(const FlowPolynomial& p);
Json to_json(const HomogeneousDerivation& d);
Json to_json(const Derivation& d);
Json to_json(const Cone& c);

/// {"free": [...], "torsion": [...]}; a bare list is accepted for
/// torsion-free groups.
GroupElement parse_element(const Json& j, const AbelianGroup& group, const std::string& where);

struct MonoidDocument {
    std::optional<std::string> name;
    std::shared_ptr<const AffineMonoid> monoid;
};

/// {"name"?, "group": {"rank", "torsion"}, "generators": [element...]}, or
/// {"name"?, "presentation": {"n", "relations"}, "generators": [Z^n vectors]}
/// where the group is Z^n modulo the relations.
MonoidDocument parse_monoid_document(const Json& j, const std::string& where = "");
/// Canonical form: group in invariant-factor form, generators sorted.
Json to_json(const MonoidDocument& doc);

/// {"rank"?, "rays": [[...], ...]} or a bare list of rays.
Cone parse_cone(const Json& j, const std::string& where);
/// "1,0;1,2" (rays separated by ';').
Cone parse_cone_text(const std::string& text);

/// [{"exponent": element, "coefficient": rational}, ...]
AlgebraElement parse_polynomial(const Json& j, const AbelianGroup& group, const std::string& where);

/// One of
///   {"root": {"alpha": element, "ray"?: [...]}, "lambda"?: rational}
///   {"pieces": [{"degree": element, "character": [rationals]}, ...]}
///   {"images": [{"generator": element, "image": polynomial}, ...]}
Derivation parse_derivation(const Json& j, const std::shared_ptr<const AffineMonoid>& s, const std::string& where);

/// 64-bit FNV-1a of the compact serialization, as 16 hex digits.
std::string digest(const Json& j);

}  // namespace toric::io
