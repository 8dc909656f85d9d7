#ifndef BICOMM_UNI_POLYNOMIAL_HPP
#define BICOMM_UNI_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace bicomm {

// Dense polynomial in t over Q, lowest degree first, no trailing zeros; the
// zero polynomial has no coefficients.
class UniPolynomial {
public:
    UniPolynomial() = default;
    UniPolynomial(std::initializer_list<Rational> c) : c_(c) { trim(); }
    explicit UniPolynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static UniPolynomial constant(const Rational& c) { return UniPolynomial({c}); }

    static UniPolynomial monomial(std::size_t k, const Rational& c)
    {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return UniPolynomial(std::move(v));
    }

    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& t) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UniPolynomial& operator+=(const UniPolynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    UniPolynomial& operator-=(const UniPolynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    UniPolynomial& operator*=(const Rational& s)
    {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }

    friend UniPolynomial operator+(UniPolynomial a, const UniPolynomial& b) { return a += b; }
    friend UniPolynomial operator-(UniPolynomial a, const UniPolynomial& b) { return a -= b; }
    friend UniPolynomial operator-(UniPolynomial a) { return a *= Rational(-1); }
    friend UniPolynomial operator*(UniPolynomial a, const Rational& s) { return a *= s; }
    friend UniPolynomial operator*(const Rational& s, UniPolynomial a) { return a *= s; }

    friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPolynomial(std::move(r));
    }

    UniPolynomial& operator*=(const UniPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const UniPolynomial& a, const UniPolynomial& b) { return a.c_ == b.c_; }

    std::vector<std::string> to_strings() const
    {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(bicomm::to_string(c));
        return out;
    }

    std::string to_string(char var = 't') const
    {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (bicomm::is_zero(c_[k])) continue;
            std::string coef = bicomm::to_string(abs(c_[k]));
            std::string piece;
            if (k == 0) piece = coef;
            else {
                piece = coef == "1" ? "" : coef + "*";
                piece += var;
                if (k > 1) piece += "^" + std::to_string(k);
            }
            const bool neg = sgn(c_[k]) < 0;
            if (out.empty()) out = (neg ? "-" : "") + piece;
            else out += (neg ? " - " : " + ") + piece;
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && bicomm::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline UniPolynomial pow(const UniPolynomial& p, unsigned k)
{
    UniPolynomial r = UniPolynomial::constant(1);
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

// Euclidean division: a = q b + r with deg r < deg b.
inline std::pair<UniPolynomial, UniPolynomial> divmod(const UniPolynomial& a, const UniPolynomial& b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) return {UniPolynomial{}, a};
    std::vector<Rational> quo(rem.size() - db);
    for (std::size_t k = rem.size(); k-- > db;) {
        const Rational q = rem[k] / b.leading();
        quo[k - db] = q;
        if (is_zero(q)) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coefficient(j);
    }
    rem.resize(db);
    return {UniPolynomial(std::move(quo)), UniPolynomial(std::move(rem))};
}

// Monic gcd (zero when both inputs are zero).
inline UniPolynomial gcd(UniPolynomial a, UniPolynomial b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

} // namespace bicomm

#endif
