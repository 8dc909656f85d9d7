#ifndef BICOMM_YZ_POLYNOMIAL_HPP
#define BICOMM_YZ_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "errors.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace bicomm {

// Sparse element of K[Y_d, Z_d]. No stored coefficient is zero and every key
// has rank d.
class YZPolynomial {
public:
    using term_map = std::map<Monomial, Rational, MonomialOrder>;

    explicit YZPolynomial(std::size_t rank = 0) : rank_(rank) {}

    static YZPolynomial constant(std::size_t rank, const Rational& c)
    {
        YZPolynomial p(rank);
        p.add_term(Monomial(rank), c);
        return p;
    }

    static YZPolynomial variable(std::size_t rank, Alphabet a, std::size_t i)
    {
        YZPolynomial p(rank);
        p.add_term(Monomial::variable(rank, a, i), Rational(1));
        return p;
    }

    static YZPolynomial y(std::size_t rank, std::size_t i) { return variable(rank, Alphabet::Y, i); }
    static YZPolynomial z(std::size_t rank, std::size_t i) { return variable(rank, Alphabet::Z, i); }

    static YZPolynomial term(const Monomial& m, const Rational& c)
    {
        YZPolynomial p(m.rank());
        p.add_term(m, c);
        return p;
    }

    std::size_t rank() const { return rank_; }
    const term_map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (m.rank() != rank_) throw RankMismatch("polynomial term: rank mismatch");
        if (bicomm::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (bicomm::is_zero(it->second)) terms_.erase(it);
        }
    }

    // Degree of a homogeneous nonzero polynomial; nullopt otherwise.
    std::optional<unsigned> homogeneous_degree() const
    {
        if (terms_.empty()) return std::nullopt;
        const unsigned deg = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != deg) return std::nullopt;
        return deg;
    }

    std::optional<std::pair<unsigned, unsigned>> homogeneous_bidegree() const
    {
        if (terms_.empty()) return std::nullopt;
        const auto& first = terms_.begin()->first;
        const std::pair<unsigned, unsigned> bideg{first.y_degree(), first.z_degree()};
        for (const auto& [m, c] : terms_)
            if (m.y_degree() != bideg.first || m.z_degree() != bideg.second) return std::nullopt;
        return bideg;
    }

    YZPolynomial& operator+=(const YZPolynomial& o)
    {
        check_rank(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    YZPolynomial& operator-=(const YZPolynomial& o)
    {
        check_rank(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    YZPolynomial& operator*=(const Rational& s)
    {
        if (bicomm::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend YZPolynomial operator+(YZPolynomial a, const YZPolynomial& b) { return a += b; }
    friend YZPolynomial operator-(YZPolynomial a, const YZPolynomial& b) { return a -= b; }
    friend YZPolynomial operator*(YZPolynomial a, const Rational& s) { return a *= s; }
    friend YZPolynomial operator*(const Rational& s, YZPolynomial a) { return a *= s; }
    friend YZPolynomial operator-(YZPolynomial a) { return a *= Rational(-1); }

    friend YZPolynomial operator*(const YZPolynomial& a, const YZPolynomial& b)
    {
        a.check_rank(b);
        YZPolynomial r(a.rank_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    YZPolynomial& operator*=(const YZPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const YZPolynomial& a, const YZPolynomial& b)
    {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            const bool unit_monomial = m.degree() == 0;
            std::string coef;
            if (c == 1 && !unit_monomial) coef.clear();
            else if (c == -1 && !unit_monomial) coef = "-";
            else coef = bicomm::to_string(c);
            std::string piece = coef;
            if (!unit_monomial) piece += (coef.empty() || coef == "-" ? "" : "*") + m.to_string();
            if (!out.empty()) out += (piece[0] == '-' ? " - " + piece.substr(1) : " + " + piece);
            else out = piece;
        }
        return out;
    }

private:
    void check_rank(const YZPolynomial& o) const
    {
        if (o.rank_ != rank_) throw RankMismatch("polynomial arithmetic: rank mismatch");
    }

    std::size_t rank_;
    term_map terms_;
};

inline YZPolynomial pow(const YZPolynomial& p, unsigned k)
{
    YZPolynomial r = YZPolynomial::constant(p.rank(), Rational(1));
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

// Ordinary commutative product in K[Y_d, Z_d].
inline YZPolynomial poly_mul(const YZPolynomial& p, const YZPolynomial& q) { return p * q; }

} // namespace bicomm

#endif
