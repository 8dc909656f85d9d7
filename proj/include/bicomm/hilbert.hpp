#ifndef BICOMM_HILBERT_HPP
#define BICOMM_HILBERT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "uni_polynomial.hpp"

namespace bicomm {

/// Rational function in t kept in canonical form: numerator and denominator
/// coprime over Q and the denominator normalized to constant term 1. Only
/// functions regular at t = 0 are representable, which covers every Hilbert
/// series handled here, and makes equality a plain comparison of the parts.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(UniPolynomial::constant(1)) {}

    RationalFunction(const UniPolynomial& p) : num_(p), den_(UniPolynomial::constant(1)) {} // NOLINT

    RationalFunction(UniPolynomial num, UniPolynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = UniPolynomial::constant(1);
            return;
        }
        const UniPolynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const Rational c0 = den_.coefficient(0);
        if (is_zero(c0)) throw DomainError("rational function is not regular at t = 0");
        if (c0 != 1) {
            const Rational s = Rational(1) / c0;
            num_ *= s;
            den_ *= s;
        }
    }

    const UniPolynomial& numerator() const { return num_; }
    const UniPolynomial& denominator() const { return den_; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

    friend RationalFunction operator*(const Rational& s, const RationalFunction& a)
    {
        if (is_zero(s)) return {};
        RationalFunction r = a;
        r.num_ *= s;
        return r;
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        if (b.num_.is_zero()) throw DomainError("rational function division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const
    {
        if (den_.degree() == 0) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    UniPolynomial num_;
    UniPolynomial den_;
};

// First order+1 coefficients of a power series.
struct TruncatedSeries {
    std::vector<Rational> coefficients;
    unsigned order = 0;

    const Rational& operator[](std::size_t n) const { return coefficients.at(n); }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// Taylor coefficients of num/den at t = 0 via the recurrence
///   den(0) c_n = num_n - sum_{k>=1} den_k c_{n-k}.
inline TruncatedSeries expand(const UniPolynomial& num, const UniPolynomial& den, unsigned order)
{
    const Rational d0 = den.coefficient(0);
    if (is_zero(d0)) throw DomainError("expand: denominator vanishes at t = 0");
    TruncatedSeries s{std::vector<Rational>(order + 1), order};
    const auto dd = static_cast<std::size_t>(den.degree());
    for (std::size_t n = 0; n <= order; ++n) {
        Rational c = num.coefficient(n);
        for (std::size_t k = 1; k <= std::min(n, dd); ++k) c -= den.coefficient(k) * s.coefficients[n - k];
        s.coefficients[n] = c / d0;
    }
    return s;
}

inline TruncatedSeries expand(const RationalFunction& f, unsigned order)
{
    return expand(f.numerator(), f.denominator(), order);
}

/// det(I - g t) by Faddeev-LeVerrier: with M_1 = I,
///   a_k = -tr(g M_k) / k,  M_{k+1} = g M_k + a_k I,
/// the characteristic polynomial is l^d + a_1 l^(d-1) + ... + a_d, hence
/// det(I - g t) = 1 + a_1 t + ... + a_d t^d.
inline UniPolynomial char_det(const RationalMatrix& g)
{
    const std::size_t d = g.size();
    std::vector<Rational> a(d + 1);
    a[0] = 1;
    RationalMatrix M = RationalMatrix::identity(d);
    for (std::size_t k = 1; k <= d; ++k) {
        RationalMatrix gM = g * M;
        a[k] = -gM.trace() / Rational(static_cast<unsigned long>(k));
        for (std::size_t i = 0; i < d; ++i) gM(i, i) += a[k];
        M = std::move(gM);
    }
    return UniPolynomial(std::move(a));
}

namespace detail {

inline Rational inverse_order(const FiniteGroup& G) { return Rational(1) / Rational(static_cast<unsigned long>(G.order())); }

template <typename Summand>
RationalFunction group_average(const FiniteGroup& G, Summand&& summand)
{
    RationalFunction acc;
    for (const auto& g : G.elements()) acc = acc + summand(g);
    return inverse_order(G) * acc;
}

inline const UniPolynomial& one() { static const UniPolynomial p = UniPolynomial::constant(1); return p; }
inline const UniPolynomial& t() { static const UniPolynomial p = UniPolynomial::monomial(1, 1); return p; }

} // namespace detail

// Hilbert series of K[X_d]^G: (1/|G|) sum 1/det(I - g t).
inline RationalFunction molien_classic(const FiniteGroup& G)
{
    return detail::group_average(G, [](const RationalMatrix& g) { return RationalFunction(detail::one(), char_det(g)); });
}

// Hilbert series of K<X_d>^G: (1/|G|) sum 1/(1 - tr(g) t).
inline RationalFunction dicks_formanek(const FiniteGroup& G)
{
    return detail::group_average(G, [](const RationalMatrix& g) {
        return RationalFunction(detail::one(), UniPolynomial{Rational(1), -g.trace()});
    });
}

// d t + (1/(1-t)^d - 1)^2.
inline RationalFunction hilbert_free_bicomm(std::size_t d)
{
    if (d == 0) throw DomainError("hilbert_free_bicomm: rank must be positive");
    const RationalFunction inner = RationalFunction(detail::one(), pow(UniPolynomial{1, -1}, static_cast<unsigned>(d))) -
                                   RationalFunction(detail::one());
    return inner * inner + RationalFunction(UniPolynomial::monomial(1, Rational(static_cast<unsigned long>(d))));
}

/// Hilbert series of the invariants of G in the free bicommutative algebra:
///   (1/|G|) sum_g ((1/det(I - g t) - 1)^2 + tr(g) t).
/// This is the multigraded series sum t_i + (prod 1/(1 - t_i) - 1)^2 with the
/// eigenvalue substitution t_i -> xi_i(g) t, expressed through det and trace
/// so that no eigenvalue is ever needed.
inline RationalFunction molien_bicomm_summand(const RationalMatrix& g)
{
    const RationalFunction inner = RationalFunction(detail::one(), char_det(g)) - RationalFunction(detail::one());
    return inner * inner + RationalFunction(UniPolynomial::monomial(1, g.trace()));
}

inline RationalFunction molien_bicomm(const FiniteGroup& G)
{
    return detail::group_average(G, molien_bicomm_summand);
}

} // namespace bicomm

#endif
