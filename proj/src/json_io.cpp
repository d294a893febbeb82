#include "mira/json_io.hpp"

#include <fstream>

#include "mira/errors.hpp"

namespace mira {

Json rational_to_json(const Rational& x) { return rational_str(x); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error("expected a rational as integer or \"num/den\" string");
}

Json cyclotomic_to_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& [e, r] : c.coeffs()) coeffs.push_back({e, rational_to_json(r)});
    return {{"p", c.prime()}, {"M", c.level()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    long p = j.at("p").get<long>();
    int level = j.at("M").get<int>();
    Cyclotomic out;
    for (const auto& entry : j.at("coeffs")) {
        long e = entry.at(0).get<long>();
        Rational r = rational_from_json(entry.at(1));
        Cyclotomic term = level == 0 ? Cyclotomic(r)
                                     : Cyclotomic::root_of_unity(p, level, e) * Cyclotomic(r);
        out += term;
    }
    return out;
}

Json zeta_expr_to_json(const ZetaExpr& z) {
    Json num = Json::array();
    for (const auto& [e, c] : z.num().terms()) num.push_back({e, cyclotomic_to_json(c)});
    Json den = Json::array();
    for (const auto& f : z.den()) den.push_back({cyclotomic_to_json(f.c), f.k});
    return {{"q", z.q()}, {"num", num}, {"den", den}};
}

ZetaExpr zeta_expr_from_json(const Json& j) {
    long q = j.at("q").get<long>();
    LaurentPoly num;
    for (const auto& entry : j.at("num"))
        num.set_term(entry.at(0).get<long>(), cyclotomic_from_json(entry.at(1)));
    std::vector<DenFactor> den;
    for (const auto& entry : j.at("den"))
        den.push_back({cyclotomic_from_json(entry.at(0)), entry.at(1).get<long>()});
    return ZetaExpr(q, num, den);
}

namespace {

Json rational_vector_to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_to_json(x));
    return out;
}

std::vector<Rational> rational_vector_from_json(const Json& j) {
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

}  // namespace

Json schwartz_to_json(const SchwartzFunction& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms())
        terms.push_back({{"coeff", cyclotomic_to_json(t.coeff)},
                         {"twist", rational_vector_to_json(t.twist)},
                         {"center", rational_vector_to_json(t.center)},
                         {"levels", t.levels}});
    return {{"p", f.prime()}, {"d", f.dim()}, {"terms", terms}};
}

SchwartzFunction schwartz_from_json(const Json& j) {
    SchwartzFunction f(j.at("p").get<long>(), j.at("d").get<long>());
    for (const auto& tj : j.at("terms")) {
        ModulatedBall t;
        t.coeff = tj.contains("coeff") ? cyclotomic_from_json(tj.at("coeff"))
                                       : Cyclotomic(Rational(1));
        t.twist = rational_vector_from_json(tj.at("twist"));
        t.center = rational_vector_from_json(tj.at("center"));
        t.levels = tj.at("levels").get<std::vector<long>>();
        f.add_term(std::move(t));
    }
    return f;
}

Json matrix_to_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error("matrix JSON must be a nonempty array of rows");
    RationalMatrix m(static_cast<long>(j.size()), static_cast<long>(j.at(0).size()));
    for (long i = 0; i < m.rows(); ++i) {
        if (static_cast<long>(j.at(i).size()) != m.cols())
            throw Error("ragged matrix JSON");
        for (long c = 0; c < m.cols(); ++c) m(i, c) = rational_from_json(j.at(i).at(c));
    }
    return m;
}

Json poly_to_json(const RationalPoly& p) { return rational_vector_to_json(p.coeffs()); }

RationalPoly poly_from_json(const Json& j) { return RationalPoly(rational_vector_from_json(j)); }

Json class_datum_to_json(const ClassDatum& d) {
    Json comps = Json::array();
    for (const auto& c : d.components)
        comps.push_back({{"poly", poly_to_json(c.poly)}, {"partition", c.partition.rows}});
    return {{"components", comps}};
}

ClassDatum class_datum_from_json(const Json& j) {
    ClassDatum d;
    for (const auto& cj : j.at("components")) {
        RationalPoly poly = poly_from_json(cj.at("poly"));
        if (!poly.is_monic()) throw Error("class component polynomial must be monic");
        d.components.push_back({poly, Partition(cj.at("partition").get<std::vector<long>>())});
    }
    return d;
}

Json zeta_factor_to_json(const LocalZetaFactor& z) {
    return {{"deg", z.deg}, {"h", z.h}, {"a", z.a}};
}

LocalZetaFactor zeta_factor_from_json(const Json& j) {
    return {j.at("deg").get<long>(), j.at("h").get<long>(), j.at("a").get<long>()};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace mira
