#pragma once

#include "skein/broken_lines.hpp"
#include "skein/normal_form.hpp"
#include "skein/verify.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace skein::io {

using Json = nlohmann::json;

/// Thrown on any input that does not match the schema or is not in
/// canonical form.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers that fit in int64 are JSON numbers; larger ones are decimal strings.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

Json to_json(BPoint p);
Json to_json(LiftVec v);
Json to_json(const Matrix2& M);
Json to_json(const RationalPoint& q);
/// List of {"A", "m", "c"} terms sorted by (variable exponents, A exponent).
Json to_json(const CoeffPoly& p);
/// {"ring", "terms": [{"p": [m, n], "c": poly}, ...]} sorted by p.
Json to_json(const AlgebraElement& e);
/// {"ring", "order", "coeffs": [poly, ...]}.
Json to_json(const RaySeries& s);
/// {"ring", "terms": [{"j": 1..3, "a", "b", "name", "c": poly}, ...]}.
Json to_json(const NormalElement& e);
Json to_json(const BrokenLineTrace& t);
/// {"name", "params", "status", "checks", "failures", "witnesses", "notes"}.
Json to_json(const Report& r);

BPoint bpoint_from_json(const Json& j);
Matrix2 matrix_from_json(const Json& j);
CoeffPoly poly_from_json(Ring ring, const Json& j);
AlgebraElement element_from_json(const Json& j);
RaySeries series_from_json(const Json& j);
NormalElement normal_from_json(const Json& j);

Ring ring_from_name(std::string_view name);

/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace skein::io
