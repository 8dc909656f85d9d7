#ifndef BICOMM_IO_HPP
#define BICOMM_IO_HPP

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp> // vendored nlohmann/json

#include "errors.hpp"
#include "hilbert.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "uni_polynomial.hpp"

namespace bicomm {

using json = nlohmann::ordered_json;

/*
 * Group files are JSON documents
 *
 *   { "d": 2, "generators": [ [["0", "1"], ["1", "0"]] ] }
 *
 * with every matrix entry a rational written "p/q" or "p" (plain JSON
 * integers are accepted too). Entries need not be in lowest terms; they are
 * canonicalized on read.
 */
struct GroupSpec {
    std::size_t rank = 0;
    std::vector<RationalMatrix> generators;
};

namespace detail {

inline Rational rational_from_json(const json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
    throw ParseError("expected a rational string \"p/q\", got " + j.dump());
}

} // namespace detail

inline GroupSpec parse_group(const json& doc)
{
    if (!doc.is_object()) throw ParseError("group file: top level must be an object");
    if (!doc.contains("d") || !doc["d"].is_number_integer() || doc["d"].get<long long>() < 1)
        throw ParseError("group file: field 'd' must be a positive integer");
    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw ParseError("group file: field 'generators' must be a list of matrices");
    GroupSpec spec;
    spec.rank = doc["d"].get<std::size_t>();
    for (const auto& m : doc["generators"]) {
        if (!m.is_array() || m.size() != spec.rank) throw ParseError("group file: each generator must have d rows");
        std::vector<std::vector<Rational>> rows;
        for (const auto& row : m) {
            if (!row.is_array() || row.size() != spec.rank)
                throw ParseError("group file: each generator row must have d entries");
            std::vector<Rational> r;
            for (const auto& e : row) r.push_back(detail::rational_from_json(e));
            rows.push_back(std::move(r));
        }
        spec.generators.emplace_back(rows);
    }
    return spec;
}

inline GroupSpec parse_group_text(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("group file: ") + e.what());
    }
    return parse_group(doc);
}

inline GroupSpec load_group_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read group file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_group_text(ss.str());
}

inline json to_json(const RationalMatrix& m) { return m.to_strings(); }

inline json to_json(const GroupSpec& spec)
{
    json gens = json::array();
    for (const auto& g : spec.generators) gens.push_back(to_json(g));
    return json{{"d", spec.rank}, {"generators", gens}};
}

inline json to_json(const UniPolynomial& p) { return p.to_strings(); }

inline UniPolynomial uni_polynomial_from_json(const json& j)
{
    if (!j.is_array()) throw ParseError("polynomial: expected a coefficient list");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(detail::rational_from_json(e));
    return UniPolynomial(std::move(c));
}

// Canonical form: coefficient lists, lowest degree first, of canonical rationals.
inline json to_json(const RationalFunction& f)
{
    return json{{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}};
}

inline RationalFunction rational_function_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator"))
        throw ParseError("rational function: expected {numerator, denominator}");
    return RationalFunction(uni_polynomial_from_json(j["numerator"]), uni_polynomial_from_json(j["denominator"]));
}

inline json to_json(const TruncatedSeries& s)
{
    json c = json::array();
    for (const auto& x : s.coefficients) c.push_back(to_string(x));
    return json{{"order", s.order}, {"coefficients", c}};
}

inline TruncatedSeries truncated_series_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("coefficients") || !j.contains("order"))
        throw ParseError("series: expected {order, coefficients}");
    TruncatedSeries s;
    s.order = j["order"].get<unsigned>();
    for (const auto& e : j["coefficients"]) s.coefficients.push_back(detail::rational_from_json(e));
    if (s.coefficients.size() != s.order + 1) throw ParseError("series: coefficient count must be order + 1");
    return s;
}

} // namespace bicomm

#endif
