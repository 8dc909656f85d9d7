#ifndef BICOMM_ALGEBRA_HPP
#define BICOMM_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "rational.hpp"
#include "yz_polynomial.hpp"

namespace bicomm {

/// Element of the free bicommutative algebra of rank d, realized as
/// K x_1 + ... + K x_d  (+)  omega(K[Y_d]) omega(K[Z_d]).
///
/// The linear part is a dense coefficient vector over x_1..x_d; the bulk part
/// is a polynomial whose every monomial has positive Y-degree and positive
/// Z-degree. Constants do not exist: the algebra has no unit.
class BicommElement {
public:
    explicit BicommElement(std::size_t rank = 0) : linear_(rank), bulk_(rank) {}

    BicommElement(std::vector<Rational> linear, YZPolynomial bulk)
        : linear_(std::move(linear)), bulk_(std::move(bulk))
    {
        if (bulk_.rank() != linear_.size()) throw RankMismatch("bicommutative element: rank mismatch");
        for (const auto& [m, c] : bulk_.terms())
            if (m.y_degree() == 0 || m.z_degree() == 0)
                throw DomainError("bicommutative element: monomial " + m.to_string() +
                                  " lies outside omega(K[Y])omega(K[Z])");
    }

    explicit BicommElement(YZPolynomial bulk) : BicommElement(std::vector<Rational>(bulk.rank()), std::move(bulk)) {}

    static BicommElement x(std::size_t rank, std::size_t i)
    {
        if (i >= rank) throw DomainError("x_i: index out of range");
        BicommElement e(rank);
        e.linear_[i] = 1;
        return e;
    }

    std::size_t rank() const { return linear_.size(); }
    const std::vector<Rational>& linear() const { return linear_; }
    const YZPolynomial& bulk() const { return bulk_; }

    bool has_linear_part() const
    {
        for (const auto& c : linear_)
            if (!bicomm::is_zero(c)) return true;
        return false;
    }

    bool is_zero() const { return !has_linear_part() && bulk_.is_zero(); }

    // Degree of a homogeneous nonzero element.
    std::optional<unsigned> homogeneous_degree() const
    {
        if (has_linear_part()) return bulk_.is_zero() ? std::optional<unsigned>(1) : std::nullopt;
        return bulk_.homogeneous_degree();
    }

    BicommElement& operator+=(const BicommElement& o)
    {
        check_rank(o);
        for (std::size_t i = 0; i < linear_.size(); ++i) linear_[i] += o.linear_[i];
        bulk_ += o.bulk_;
        return *this;
    }

    BicommElement& operator-=(const BicommElement& o)
    {
        check_rank(o);
        for (std::size_t i = 0; i < linear_.size(); ++i) linear_[i] -= o.linear_[i];
        bulk_ -= o.bulk_;
        return *this;
    }

    BicommElement& operator*=(const Rational& s)
    {
        for (auto& c : linear_) c *= s;
        bulk_ *= s;
        return *this;
    }

    friend BicommElement operator+(BicommElement a, const BicommElement& b) { return a += b; }
    friend BicommElement operator-(BicommElement a, const BicommElement& b) { return a -= b; }
    friend BicommElement operator*(BicommElement a, const Rational& s) { return a *= s; }
    friend BicommElement operator*(const Rational& s, BicommElement a) { return a *= s; }

    friend bool operator==(const BicommElement& a, const BicommElement& b)
    {
        return a.linear_ == b.linear_ && a.bulk_ == b.bulk_;
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < linear_.size(); ++i) {
            const Rational& c = linear_[i];
            if (bicomm::is_zero(c)) continue;
            std::string piece = c == 1 ? "" : c == -1 ? "-" : bicomm::to_string(c) + "*";
            piece += "x" + std::to_string(i + 1);
            if (!out.empty()) out += piece[0] == '-' ? " - " + piece.substr(1) : " + " + piece;
            else out = piece;
        }
        if (!bulk_.is_zero()) {
            const std::string b = bulk_.to_string();
            if (out.empty()) out = b;
            else out += b[0] == '-' ? " - " + b.substr(1) : " + " + b;
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_rank(const BicommElement& o) const
    {
        if (o.rank() != rank()) throw RankMismatch("bicommutative element: rank mismatch");
    }

    std::vector<Rational> linear_;
    YZPolynomial bulk_;
};

namespace detail {

// sum_i v_i w_i where w_i is y_i or z_i.
inline YZPolynomial linear_form(const std::vector<Rational>& v, Alphabet a)
{
    YZPolynomial p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        p.add_term(Monomial::variable(v.size(), a, i), v[i]);
    return p;
}

} // namespace detail

// Bilinear extension of
//   x_i x_j = y_i z_j,  x_i (Y^a Z^b) = y_i Y^a Z^b,
//   (Y^a Z^b) x_j = Y^a Z^b z_j,  (Y^a Z^b)(Y^c Z^e) = Y^(a+c) Z^(b+e).
inline BicommElement bicomm_mul(const BicommElement& a, const BicommElement& b)
{
    if (a.rank() != b.rank()) throw RankMismatch("bicomm_mul: rank mismatch");
    const std::size_t d = a.rank();
    YZPolynomial out(d);
    const bool a_lin = a.has_linear_part();
    const bool b_lin = b.has_linear_part();
    const YZPolynomial ya = a_lin ? detail::linear_form(a.linear(), Alphabet::Y) : YZPolynomial(d);
    const YZPolynomial zb = b_lin ? detail::linear_form(b.linear(), Alphabet::Z) : YZPolynomial(d);
    if (a_lin && b_lin) out += ya * zb;
    if (a_lin && !b.bulk().is_zero()) out += ya * b.bulk();
    if (!a.bulk().is_zero() && b_lin) out += a.bulk() * zb;
    if (!a.bulk().is_zero() && !b.bulk().is_zero()) out += a.bulk() * b.bulk();
    return BicommElement(std::move(out));
}

inline BicommElement operator*(const BicommElement& a, const BicommElement& b) { return bicomm_mul(a, b); }

namespace detail {

inline std::uint64_t binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r.get_ui();
}

} // namespace detail

/// Monomial basis of the degree-n component, in MonomialOrder.
/// n = 1 gives x_1..x_d; n >= 2 gives every Y^a Z^b with |a| + |b| = n and
/// |a|, |b| >= 1.
inline std::vector<BicommElement> basis_component(std::size_t d, unsigned n)
{
    if (n == 0) throw DomainError("basis_component: degree 0 is empty (the algebra has no unit)");
    std::vector<BicommElement> out;
    if (n == 1) {
        for (std::size_t i = 0; i < d; ++i) out.push_back(BicommElement::x(d, i));
        return out;
    }
    for (unsigned a = 1; a < n; ++a) {
        const auto alphas = compositions(d, a);
        const auto betas = compositions(d, n - a);
        for (const auto& alpha : alphas)
            for (const auto& beta : betas)
                out.emplace_back(YZPolynomial::term(Monomial(alpha, beta), Rational(1)));
    }
    return out;
}

/// Bulk monomials of bidegree (a, b), in MonomialOrder.
inline std::vector<Monomial> bidegree_monomials(std::size_t d, unsigned a, unsigned b)
{
    std::vector<Monomial> out;
    for (const auto& alpha : compositions(d, a))
        for (const auto& beta : compositions(d, b)) out.emplace_back(alpha, beta);
    return out;
}

inline std::uint64_t dim_component(std::size_t d, unsigned n)
{
    if (n == 0) throw DomainError("dim_component: degree 0 is empty (the algebra has no unit)");
    if (n == 1) return d;
    if (d == 0) return 0;
    const auto k = static_cast<unsigned>(d - 1);
    std::uint64_t total = 0;
    for (unsigned a = 1; a < n; ++a)
        total += detail::binomial(a + k, k) * detail::binomial(n - a + k, k);
    return total;
}

} // namespace bicomm

#endif
