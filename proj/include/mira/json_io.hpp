#pragma once

#include <json.hpp>

#include "mira/canonical.hpp"
#include "mira/mirabolic.hpp"
#include "mira/partitions.hpp"
#include "mira/schwartz.hpp"
#include "mira/tate.hpp"
#include "mira/zeta_expr.hpp"

namespace mira {

using Json = nlohmann::json;

Json rational_to_json(const Rational& x);          // "num/den" string
Rational rational_from_json(const Json& j);

// {"p": int, "M": int, "coeffs": [[e, "num/den"], ...]}
Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

// {"q": int, "num": [[exp, coeff], ...], "den": [[c, k], ...]}
Json zeta_expr_to_json(const ZetaExpr& z);
ZetaExpr zeta_expr_from_json(const Json& j);

// {"p":..., "d":..., "terms":[{"coeff":..., "twist":[...], "center":[...], "levels":[...]}]}
Json schwartz_to_json(const SchwartzFunction& f);
SchwartzFunction schwartz_from_json(const Json& j);

// Arrays of arrays of "num/den".
Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

// Ascending coefficient array of "num/den".
Json poly_to_json(const RationalPoly& p);
RationalPoly poly_from_json(const Json& j);

// {"components":[{"poly":[...], "partition":[...]}]}
Json class_datum_to_json(const ClassDatum& d);
ClassDatum class_datum_from_json(const Json& j);

// {"deg": d, "h": h, "a": a}
Json zeta_factor_to_json(const LocalZetaFactor& z);
LocalZetaFactor zeta_factor_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace mira
