#ifndef BICOMM_RATIONAL_HPP
#define BICOMM_RATIONAL_HPP

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace bicomm {

// The ground field. mpq_class keeps every value in lowest terms with a
// positive denominator; zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline bool is_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace detail

// Accepts "p" or "p/q" (surrounding blanks ignored, not necessarily in lowest
// terms) and returns the canonical value.
inline Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");

    auto strip_plus = [](std::string_view s) { return s[0] == '+' ? s.substr(1) : s; };
    Integer p(std::string(strip_plus(num)), 10);
    Integer q(std::string(strip_plus(den)), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");

    Rational r(p, q);
    r.canonicalize();
    return r;
}

// Canonical text: "p/q" with q > 0 and gcd(p, q) = 1, "p" when q = 1, "0" for zero.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

} // namespace bicomm

#endif
