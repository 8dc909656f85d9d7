#ifndef BICOMM_GROUP_HPP
#define BICOMM_GROUP_HPP

#include <cstddef>
#include <deque>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "yz_polynomial.hpp"

namespace bicomm {

inline constexpr std::size_t kDefaultClosureCap = 100000;

/// A finite subgroup of GL_d(Q), held as its full element list. The only way
/// to obtain one is group_closure, so the list always contains the identity,
/// is closed under products and inverses, and has no duplicates.
class FiniteGroup {
public:
    std::size_t rank() const { return rank_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<RationalMatrix>& elements() const { return elements_; }
    const std::vector<RationalMatrix>& generators() const { return generators_; }

    bool contains(const RationalMatrix& g) const
    {
        for (const auto& h : elements_)
            if (h == g) return true;
        return false;
    }

    bool is_trivial() const { return elements_.size() == 1; }

private:
    friend FiniteGroup group_closure(std::size_t, std::span<const RationalMatrix>, std::size_t);

    std::size_t rank_ = 0;
    std::vector<RationalMatrix> elements_;
    std::vector<RationalMatrix> generators_;
};

/// Breadth-first closure from the identity; each dequeued element is
/// multiplied on the right by the generators in order, and new products are
/// appended. Throws SingularMatrix for a non-invertible generator and
/// CapExceeded once more than `cap` elements have been produced.
inline FiniteGroup group_closure(std::size_t d, std::span<const RationalMatrix> generators,
                                 std::size_t cap = kDefaultClosureCap)
{
    for (const auto& g : generators) {
        if (g.size() != d) throw RankMismatch("group_closure: generator of size " + std::to_string(g.size()) +
                                              " in rank " + std::to_string(d));
        if (is_zero(g.determinant())) throw SingularMatrix("group_closure: generator is not invertible");
    }
    FiniteGroup G;
    G.rank_ = d;
    G.generators_.assign(generators.begin(), generators.end());
    std::set<RationalMatrix> seen;
    G.elements_.push_back(RationalMatrix::identity(d));
    seen.insert(G.elements_.back());
    for (std::size_t head = 0; head < G.elements_.size(); ++head) {
        for (const auto& s : generators) {
            RationalMatrix p = G.elements_[head] * s;
            if (seen.insert(p).second) {
                G.elements_.push_back(std::move(p));
                if (G.elements_.size() > cap)
                    throw CapExceeded("group closure exceeded " + std::to_string(cap) +
                                      " elements (infinite or too large group)");
            }
        }
    }
    return G;
}

inline FiniteGroup group_closure(std::size_t d, std::initializer_list<RationalMatrix> generators,
                                 std::size_t cap = kDefaultClosureCap)
{
    return group_closure(d, std::span<const RationalMatrix>(generators.begin(), generators.size()), cap);
}

// Coefficient vector of sum_j v_j x_j under x_j -> sum_i g(i, j) x_i, i.e. g v.
inline std::vector<Rational> act_linear(const RationalMatrix& g, const std::vector<Rational>& v)
{
    if (g.size() != v.size()) throw RankMismatch("act_linear: rank mismatch");
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!is_zero(v[j])) out[i] += g(i, j) * v[j];
    return out;
}

/// The algebra endomorphism of K[Y_d, Z_d] given by y_j -> sum_i g(i, j) y_i
/// and z_j -> sum_i g(i, j) z_i. Caches powers of the variable images, so one
/// instance is meant to be reused across many polynomials.
class LinearSubstitution {
public:
    explicit LinearSubstitution(const RationalMatrix& g) : g_(g), monomial_(g.is_monomial()), powers_(2 * g.size())
    {
        const std::size_t d = g.size();
        for (std::size_t j = 0; j < d; ++j) {
            YZPolynomial yj(d), zj(d);
            for (std::size_t i = 0; i < d; ++i) {
                yj.add_term(Monomial::variable(d, Alphabet::Y, i), g(i, j));
                zj.add_term(Monomial::variable(d, Alphabet::Z, i), g(i, j));
            }
            powers_[j] = {YZPolynomial::constant(d, 1), std::move(yj)};
            powers_[d + j] = {YZPolynomial::constant(d, 1), std::move(zj)};
        }
        if (monomial_) {
            target_.resize(d);
            scale_.resize(d);
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t i = 0; i < d; ++i)
                    if (!is_zero(g(i, j))) {
                        target_[j] = i;
                        scale_[j] = g(i, j);
                    }
        }
    }

    std::size_t rank() const { return g_.size(); }

    YZPolynomial apply(const YZPolynomial& p)
    {
        if (p.rank() != rank()) throw RankMismatch("act_bulk: rank mismatch");
        YZPolynomial out(rank());
        for (const auto& [m, c] : p.terms()) apply_term(m, c, out);
        return out;
    }

    // Accumulates c * g(m) into out.
    void apply_term(const Monomial& m, const Rational& c, YZPolynomial& out)
    {
        const std::size_t d = rank();
        if (monomial_) {
            std::vector<Monomial::exponent_type> alpha(d, 0), beta(d, 0);
            Rational coef = c;
            for (std::size_t j = 0; j < d; ++j) {
                const auto ey = m.y_exponent(j), ez = m.z_exponent(j);
                alpha[target_[j]] += ey;
                beta[target_[j]] += ez;
                if (ey + ez > 0) {
                    Rational s;
                    mpz_pow_ui(s.get_num_mpz_t(), scale_[j].get_num_mpz_t(), ey + ez);
                    mpz_pow_ui(s.get_den_mpz_t(), scale_[j].get_den_mpz_t(), ey + ez);
                    coef *= s;
                }
            }
            out.add_term(Monomial(alpha, beta), coef);
            return;
        }
        YZPolynomial acc = YZPolynomial::constant(d, c);
        const auto e = m.exponents();
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) acc *= power(v, e[v]);
        out += acc;
    }

private:
    const YZPolynomial& power(std::size_t var, unsigned e)
    {
        auto& pw = powers_[var];
        while (pw.size() <= e) pw.push_back(pw.back() * pw[1]);
        return pw[e];
    }

    RationalMatrix g_;
    bool monomial_;
    std::vector<std::size_t> target_;
    std::vector<Rational> scale_;
    std::vector<std::vector<YZPolynomial>> powers_;
};

inline YZPolynomial act_bulk(const RationalMatrix& g, const YZPolynomial& p)
{
    if (g.size() != p.rank()) throw RankMismatch("act_bulk: rank mismatch");
    LinearSubstitution s(g);
    return s.apply(p);
}

inline BicommElement act(const RationalMatrix& g, const BicommElement& a)
{
    if (g.size() != a.rank()) throw RankMismatch("act: rank mismatch");
    return BicommElement(act_linear(g, a.linear()), act_bulk(g, a.bulk()));
}

/// Orbit average (1/|G|) sum_g g(a): the projection onto the G-invariants.
inline BicommElement reynolds(const FiniteGroup& G, const BicommElement& a)
{
    if (G.rank() != a.rank()) throw RankMismatch("reynolds: rank mismatch");
    BicommElement sum(a.rank());
    for (const auto& g : G.elements()) sum += act(g, a);
    return sum * Rational(1, G.order());
}

} // namespace bicomm

#endif
