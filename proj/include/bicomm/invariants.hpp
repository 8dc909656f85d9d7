#ifndef BICOMM_INVARIANTS_HPP
#define BICOMM_INVARIANTS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "linalg.hpp"
#include "yz_polynomial.hpp"

namespace bicomm {

// Column key of the monomial basis of R_d: x_i first (by index), then bulk
// monomials in MonomialOrder.
struct BasisKey {
    bool bulk = false;
    std::size_t index = 0;
    Monomial monomial;
};

struct BasisOrder {
    bool operator()(const BasisKey& a, const BasisKey& b) const
    {
        if (a.bulk != b.bulk) return !a.bulk;
        if (!a.bulk) return a.index < b.index;
        return MonomialOrder{}(a.monomial, b.monomial);
    }
};

using ElementEchelon = SparseEchelon<BasisKey, BasisOrder>;
using PolynomialEchelon = SparseEchelon<Monomial, MonomialOrder>;

inline ElementEchelon::Vector to_vector(const BicommElement& a)
{
    ElementEchelon::Vector v;
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!is_zero(a.linear()[i])) v.emplace(BasisKey{false, i, {}}, a.linear()[i]);
    for (const auto& [m, c] : a.bulk().terms()) v.emplace(BasisKey{true, 0, m}, c);
    return v;
}

inline BicommElement from_vector(std::size_t d, const ElementEchelon::Vector& v)
{
    std::vector<Rational> lin(d);
    YZPolynomial bulk(d);
    for (const auto& [k, c] : v) {
        if (k.bulk) bulk.add_term(k.monomial, c);
        else lin.at(k.index) = c;
    }
    return BicommElement(std::move(lin), std::move(bulk));
}

inline YZPolynomial from_vector(std::size_t d, const PolynomialEchelon::Vector& v)
{
    YZPolynomial p(d);
    for (const auto& [m, c] : v) p.add_term(m, c);
    return p;
}

/// Dense coordinates of homogeneous degree-n elements; column j is the j-th
/// element of basis_component(d, n).
struct CoefficientMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Rational>> entries;

    std::size_t rank() const { return bareiss_rank(entries); }
};

inline CoefficientMatrix coefficient_matrix(std::span<const BicommElement> elements, std::size_t d, unsigned n)
{
    const auto basis = basis_component(d, n);
    std::map<BasisKey, std::size_t, BasisOrder> column;
    for (std::size_t j = 0; j < basis.size(); ++j) column.emplace(to_vector(basis[j]).begin()->first, j);
    CoefficientMatrix m{elements.size(), basis.size(), {}};
    for (const auto& e : elements) {
        if (e.rank() != d) throw RankMismatch("coefficient_matrix: rank mismatch");
        std::vector<Rational> row(basis.size());
        for (const auto& [k, c] : to_vector(e)) {
            auto it = column.find(k);
            if (it == column.end()) throw NonHomogeneous("coefficient_matrix: element has terms outside degree " +
                                                         std::to_string(n));
            row[it->second] = c;
        }
        m.entries.push_back(std::move(row));
    }
    return m;
}

struct InvariantBasis {
    unsigned degree = 0;
    std::vector<BicommElement> elements;
    std::size_t dimension = 0;
};

namespace detail {

inline std::vector<LinearSubstitution> substitutions(const FiniteGroup& G)
{
    std::vector<LinearSubstitution> subs;
    subs.reserve(G.order());
    for (const auto& g : G.elements()) subs.emplace_back(g);
    return subs;
}

// Orbit sum of a monomial (the Reynolds image up to the factor 1/|G|).
inline YZPolynomial orbit_sum(std::vector<LinearSubstitution>& subs, const Monomial& m)
{
    YZPolynomial acc(m.rank());
    for (auto& s : subs) s.apply_term(m, Rational(1), acc);
    return acc;
}

// Echelon of the Reynolds images of the degree-n basis monomials.
inline ElementEchelon invariant_echelon(const FiniteGroup& G, unsigned n)
{
    if (n == 0) throw DomainError("invariants: degree 0 is empty (the algebra has no unit)");
    const std::size_t d = G.rank();
    ElementEchelon ech;
    if (n == 1) {
        for (std::size_t i = 0; i < d; ++i) ech.insert(to_vector(reynolds(G, BicommElement::x(d, i))));
        return ech;
    }
    auto subs = substitutions(G);
    for (unsigned a = 1; a < n; ++a)
        for (const auto& m : bidegree_monomials(d, a, n - a)) {
            const YZPolynomial orbit = orbit_sum(subs, m);
            ElementEchelon::Vector v;
            for (const auto& [mm, c] : orbit.terms()) v.emplace(BasisKey{true, 0, mm}, c);
            ech.insert(v);
        }
    return ech;
}

} // namespace detail

/// Reduced echelon basis of the degree-n G-invariants, obtained as the span
/// of the Reynolds images of basis_component(d, n).
inline InvariantBasis invariant_basis(const FiniteGroup& G, unsigned n)
{
    const auto ech = detail::invariant_echelon(G, n);
    InvariantBasis out{n, {}, ech.rank()};
    for (const auto& v : ech.reduced_basis()) out.elements.push_back(from_vector(G.rank(), v));
    return out;
}

inline std::size_t invariant_dimension(const FiniteGroup& G, unsigned n)
{
    return detail::invariant_echelon(G, n).rank();
}

// Dimension of the degree-n invariants of the commutative polynomial algebra
// K[X_d] (realized on the Y alphabet), by the same Reynolds projection.
inline std::size_t polynomial_invariant_dimension(const FiniteGroup& G, unsigned n)
{
    if (n == 0) return 1;
    auto subs = detail::substitutions(G);
    PolynomialEchelon ech;
    const std::vector<Monomial::exponent_type> zero(G.rank(), 0);
    for (const auto& alpha : compositions(G.rank(), n)) ech.insert(detail::orbit_sum(subs, Monomial(alpha, zero)).terms());
    return ech.rank();
}

// Dimension of the degree-n invariants of the full polynomial algebra
// K[Y_d, Z_d] (constants and pure-Y / pure-Z monomials included).
inline std::size_t yz_invariant_dimension(const FiniteGroup& G, unsigned n)
{
    auto subs = detail::substitutions(G);
    PolynomialEchelon ech;
    for (unsigned a = 0; a <= n; ++a)
        for (const auto& m : bidegree_monomials(G.rank(), a, n - a)) ech.insert(detail::orbit_sum(subs, m).terms());
    return ech.rank();
}

/// Degree-by-degree span of the non-unital subalgebra generated by a set of
/// homogeneous elements:
///   S_n = (generators of degree n) + sum_{a+b=n} S_a * S_b.
/// Every product of two or more generators factors as u*v with u, v of lower
/// degree in the subalgebra, so pairwise products of lower spans suffice.
class SubalgebraSpanner {
public:
    SubalgebraSpanner(std::size_t d, std::span<const BicommElement> generators) : d_(d)
    {
        for (const auto& g : generators) {
            if (g.rank() != d) throw RankMismatch("subalgebra span: rank mismatch");
            if (g.is_zero()) continue;
            const auto deg = g.homogeneous_degree();
            if (!deg) throw NonHomogeneous("subalgebra span: generator " + g.to_string() + " is not homogeneous");
            by_degree_[*deg].push_back(g);
        }
        spans_.emplace_back(); // degree 0: nothing
    }

    const std::vector<BicommElement>& basis(unsigned n)
    {
        while (spans_.size() <= n) extend();
        return spans_[n];
    }

    std::size_t dimension(unsigned n) { return basis(n).size(); }

private:
    void extend()
    {
        const auto n = static_cast<unsigned>(spans_.size());
        const std::uint64_t full = dim_component(d_, n);
        ElementEchelon ech;
        auto add = [&](const BicommElement& e) { return ech.rank() < full && ech.insert(to_vector(e)); };
        if (auto it = by_degree_.find(n); it != by_degree_.end())
            for (const auto& g : it->second) add(g);
        for (unsigned a = 1; a < n && ech.rank() < full; ++a)
            for (const auto& u : spans_[a])
                for (const auto& v : spans_[n - a]) add(u * v);
        std::vector<BicommElement> basis;
        for (const auto& v : ech.reduced_basis()) basis.push_back(from_vector(d_, v));
        spans_.push_back(std::move(basis));
    }

    std::size_t d_;
    std::map<unsigned, std::vector<BicommElement>> by_degree_;
    std::vector<std::vector<BicommElement>> spans_;
};

inline std::size_t subalgebra_span_dimension(std::size_t d, std::span<const BicommElement> generators, unsigned n)
{
    if (n == 0) throw DomainError("subalgebra span: degree 0 is empty");
    SubalgebraSpanner s(d, generators);
    return s.dimension(n);
}

struct CutoffGap {
    unsigned cutoff = 0;                 // generators: all invariants of degree <= cutoff
    std::optional<unsigned> gap_degree;  // least n <= max_degree with a strict gap
    std::size_t subalgebra_dimension = 0; // at gap_degree (or at max_degree if none)
    std::size_t invariant_dimension = 0;
};

/// Empirical evidence that the invariants are not finitely generated: for
/// each cutoff c <= max_cutoff, the subalgebra generated by all invariants of
/// degree <= c is compared with the invariants themselves in degrees up to
/// max_degree. Finitely many degrees are inspected; this is a consistency
/// check, not a proof.
struct NonFgReport {
    unsigned max_cutoff = 0;
    unsigned max_degree = 0;
    std::vector<CutoffGap> cutoffs;

    bool gap_for_every_cutoff() const
    {
        for (const auto& c : cutoffs)
            if (!c.gap_degree) return false;
        return !cutoffs.empty();
    }
};

inline NonFgReport nonfg_witness(const FiniteGroup& G, unsigned max_cutoff, unsigned max_degree)
{
    if (max_cutoff < 1 || max_degree <= max_cutoff)
        throw DomainError("nonfg_witness: need max_degree > max_cutoff >= 1");
    std::vector<std::optional<std::size_t>> inv_dim(max_degree + 1);
    auto invariant_dim = [&](unsigned n) {
        if (!inv_dim[n]) inv_dim[n] = invariant_dimension(G, n);
        return *inv_dim[n];
    };
    NonFgReport report{max_cutoff, max_degree, {}};
    std::vector<BicommElement> generators;
    for (unsigned c = 1; c <= max_cutoff; ++c) {
        auto basis = invariant_basis(G, c);
        inv_dim[c] = basis.dimension;
        generators.insert(generators.end(), basis.elements.begin(), basis.elements.end());
        SubalgebraSpanner spanner(G.rank(), generators);
        CutoffGap gap{c, std::nullopt, 0, 0};
        for (unsigned n = c + 1; n <= max_degree; ++n) {
            gap.subalgebra_dimension = spanner.dimension(n);
            gap.invariant_dimension = invariant_dim(n);
            if (gap.subalgebra_dimension < gap.invariant_dimension) {
                gap.gap_degree = n;
                break;
            }
        }
        report.cutoffs.push_back(gap);
    }
    return report;
}

struct Variable {
    Alphabet alphabet = Alphabet::Y;
    std::size_t index = 0;

    std::string to_string() const { return (alphabet == Alphabet::Y ? "y" : "z") + std::to_string(index + 1); }
};

/// prod_{g in G} (x - g(v)) as a monic polynomial in x whose coefficients lie
/// in K[Y_d, Z_d]; coefficients[k] multiplies x^k.
struct IntegralDependence {
    Variable variable;
    std::vector<YZPolynomial> coefficients;

    std::size_t degree() const { return coefficients.size() - 1; }

    YZPolynomial evaluate(const YZPolynomial& at) const
    {
        YZPolynomial acc(at.rank());
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * at + *it;
        return acc;
    }
};

inline IntegralDependence integral_dependence_polynomial(const FiniteGroup& G, Variable v)
{
    const std::size_t d = G.rank();
    if (v.index >= d) throw DomainError("integral_dependence_polynomial: variable index out of range");
    const YZPolynomial var = YZPolynomial::variable(d, v.alphabet, v.index);
    std::vector<YZPolynomial> poly{YZPolynomial::constant(d, 1)};
    for (const auto& g : G.elements()) {
        const YZPolynomial root = act_bulk(g, var);
        std::vector<YZPolynomial> next(poly.size() + 1, YZPolynomial(d));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * root;
        }
        poly = std::move(next);
    }
    return {v, std::move(poly)};
}

/// Per-degree span of { c * m : c a product of coefficient generators
/// (the empty product included), m a module generator } in K[Y_d, Z_d],
/// maintained for degrees min_degree..max_degree. Module generators can be
/// added one at a time; add_generator reports whether any degree grew.
class ModuleSpanner {
public:
    ModuleSpanner(std::size_t d, std::span<const YZPolynomial> coefficient_generators, unsigned min_degree,
                  unsigned max_degree)
        : d_(d), min_(min_degree), max_(max_degree), spans_(max_degree + 1)
    {
        for (const auto& c : coefficient_generators) {
            if (c.rank() != d) throw RankMismatch("module span: rank mismatch");
            if (c.is_zero()) continue;
            const auto deg = c.homogeneous_degree();
            if (!deg) throw NonHomogeneous("module span: coefficient generator " + c.to_string() + " is not homogeneous");
            if (*deg == 0) throw DomainError("module span: coefficient generators must have positive degree");
            coeff_.emplace_back(c, *deg);
        }
        coeff_basis_.push_back({YZPolynomial::constant(d, 1)});
    }

    bool add_generator(const YZPolynomial& m)
    {
        if (m.rank() != d_) throw RankMismatch("module span: rank mismatch");
        if (m.is_zero()) return false;
        const auto deg = m.homogeneous_degree();
        if (!deg) throw NonHomogeneous("module span: module generator " + m.to_string() + " is not homogeneous");
        bool grew = false;
        for (unsigned n = std::max(*deg, min_); n <= max_; ++n)
            for (const auto& c : coefficient_basis(n - *deg)) grew |= spans_[n].insert((c * m).terms());
        return grew;
    }

    std::size_t dimension(unsigned n) const
    {
        if (n < min_ || n > max_) throw DomainError("module span: degree outside the tracked range");
        return spans_[n].rank();
    }

    // Basis of the degree-k component of the unital algebra generated by the
    // coefficient generators.
    const std::vector<YZPolynomial>& coefficient_basis(unsigned k)
    {
        while (coeff_basis_.size() <= k) {
            const auto n = static_cast<unsigned>(coeff_basis_.size());
            PolynomialEchelon ech;
            for (const auto& [g, deg] : coeff_)
                if (deg <= n)
                    for (const auto& c : coeff_basis_[n - deg]) ech.insert((g * c).terms());
            std::vector<YZPolynomial> basis;
            for (const auto& v : ech.reduced_basis()) basis.push_back(from_vector(d_, v));
            coeff_basis_.push_back(std::move(basis));
        }
        return coeff_basis_[k];
    }

private:
    std::size_t d_;
    unsigned min_, max_;
    std::vector<std::pair<YZPolynomial, unsigned>> coeff_;
    std::vector<std::vector<YZPolynomial>> coeff_basis_;
    std::vector<PolynomialEchelon> spans_;
};

inline std::size_t module_span_dimension(std::size_t d, std::span<const YZPolynomial> coefficient_generators,
                                         std::span<const YZPolynomial> module_generators, unsigned n)
{
    ModuleSpanner s(d, coefficient_generators, n, n);
    for (const auto& m : module_generators) s.add_generator(m);
    return s.dimension(n);
}

} // namespace bicomm

#endif
