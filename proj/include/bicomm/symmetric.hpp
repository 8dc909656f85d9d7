#ifndef BICOMM_SYMMETRIC_HPP
#define BICOMM_SYMMETRIC_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "invariants.hpp"
#include "yz_polynomial.hpp"

namespace bicomm {

namespace detail {

// All k-subsets of {0..d-1}, increasing tuples in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < d; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline Monomial monomial_from_indices(std::size_t d, const std::vector<std::size_t>& ys, const std::vector<std::size_t>& zs)
{
    std::vector<Monomial::exponent_type> alpha(d, 0), beta(d, 0);
    for (auto i : ys) ++alpha[i];
    for (auto j : zs) ++beta[j];
    return Monomial(alpha, beta);
}

} // namespace detail

// e_k of the Y (or Z) alphabet of rank d.
inline YZPolynomial elementary_symmetric(Alphabet alphabet, std::size_t d, std::size_t k)
{
    if (k < 1 || k > d) throw DomainError("elementary_symmetric: need 1 <= k <= d");
    YZPolynomial p(d);
    for (const auto& s : detail::subsets(d, k))
        p.add_term(alphabet == Alphabet::Y ? detail::monomial_from_indices(d, s, {})
                                           : detail::monomial_from_indices(d, {}, s),
                   Rational(1));
    return p;
}

/// Polarization e_{p,q}(Y_d, Z_d): the sum of y_{i1}..y_{ip} z_{j1}..z_{jq}
/// over increasing i-tuples and j-tuples with no index in common.
inline YZPolynomial polarized_elementary(std::size_t d, std::size_t p, std::size_t q)
{
    if (p < 1 || q < 1 || p + q > d) throw DomainError("polarized_elementary: need p, q >= 1 and p + q <= d");
    YZPolynomial out(d);
    for (const auto& is : detail::subsets(d, p))
        for (const auto& js : detail::subsets(d, q)) {
            bool disjoint = true;
            for (auto i : is)
                for (auto j : js) disjoint &= i != j;
            if (disjoint) out.add_term(detail::monomial_from_indices(d, is, js), Rational(1));
        }
    return out;
}

// Fixed by every adjacent transposition acting simultaneously on Y and Z.
inline bool is_symmetric(const YZPolynomial& p)
{
    const std::size_t d = p.rank();
    for (std::size_t i = 0; i + 1 < d; ++i) {
        std::vector<std::size_t> perm(d);
        for (std::size_t j = 0; j < d; ++j) perm[j] = j;
        std::swap(perm[i], perm[i + 1]);
        if (!(act_bulk(RationalMatrix::permutation(perm), p) == p)) return false;
    }
    return true;
}

struct D2IdentityReport {
    YZPolynomial lhs;
    YZPolynomial rhs;
    YZPolynomial difference;
    std::string reading;

    bool holds() const { return difference.is_zero(); }
};

/// Expands, in rank 2,
///   e11^2  versus  e1(Y)e1(Z)e11 - e1(Y)^2 e2(Z) - e2(Y)e1(Z)^2 + 4 e2(Y)e2(Z).
/// The second term is printed in the literature as e_1^2(Y_2)e_2(Z_1); it is
/// read here as e_2(Z_2), the only reading that makes sense in two
/// alphabets, and the report records that reading.
inline D2IdentityReport verify_d2_identity()
{
    constexpr std::size_t d = 2;
    const auto e11 = polarized_elementary(d, 1, 1);
    const auto e1y = elementary_symmetric(Alphabet::Y, d, 1);
    const auto e2y = elementary_symmetric(Alphabet::Y, d, 2);
    const auto e1z = elementary_symmetric(Alphabet::Z, d, 1);
    const auto e2z = elementary_symmetric(Alphabet::Z, d, 2);
    D2IdentityReport r;
    r.lhs = e11 * e11;
    r.rhs = e1y * e1z * e11 - e1y * e1y * e2z - e2y * e1z * e1z + Rational(4) * e2y * e2z;
    r.difference = r.lhs - r.rhs;
    r.reading = "e_2(Z_2)";
    return r;
}

struct SymmetricGeneratorTag {
    enum class Kind { EY, EZ, EPQ };

    Kind kind = Kind::EY;
    unsigned k = 0;
    unsigned p = 0;
    unsigned q = 0;

    static SymmetricGeneratorTag e_y(std::size_t d, unsigned k) { return make(d, Kind::EY, k, 0, 0); }
    static SymmetricGeneratorTag e_z(std::size_t d, unsigned k) { return make(d, Kind::EZ, k, 0, 0); }
    static SymmetricGeneratorTag e_pq(std::size_t d, unsigned p, unsigned q) { return make(d, Kind::EPQ, 0, p, q); }

    unsigned degree() const { return kind == Kind::EPQ ? p + q : k; }

    YZPolynomial value(std::size_t d) const
    {
        switch (kind) {
        case Kind::EY: return elementary_symmetric(Alphabet::Y, d, k);
        case Kind::EZ: return elementary_symmetric(Alphabet::Z, d, k);
        default: return polarized_elementary(d, p, q);
        }
    }

    std::string to_string() const
    {
        switch (kind) {
        case Kind::EY: return "e" + std::to_string(k) + "(Y)";
        case Kind::EZ: return "e" + std::to_string(k) + "(Z)";
        default: return "e" + std::to_string(p) + "," + std::to_string(q);
        }
    }

    friend bool operator==(const SymmetricGeneratorTag&, const SymmetricGeneratorTag&) = default;

private:
    static SymmetricGeneratorTag make(std::size_t d, Kind kind, unsigned k, unsigned p, unsigned q)
    {
        if (kind == Kind::EPQ ? (p < 1 || q < 1 || p + q > d) : (k < 1 || k > d))
            throw DomainError("symmetric generator: parameters out of range");
        return {kind, k, p, q};
    }
};

struct ModuleGenerator {
    std::vector<std::pair<SymmetricGeneratorTag, unsigned>> factors; // (generator, exponent)
    YZPolynomial value;
    unsigned degree = 0;

    std::string to_string() const
    {
        std::string out;
        for (const auto& [tag, e] : factors) {
            if (!out.empty()) out += "*";
            out += tag.kind == SymmetricGeneratorTag::Kind::EPQ ? "e{" + std::to_string(tag.p) + "," + std::to_string(tag.q) + "}"
                                                                : tag.to_string();
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }
};

struct SaturationEntry {
    unsigned degree = 0;
    std::size_t span_dimension = 0;
    std::size_t invariant_dimension = 0;

    bool saturated() const { return span_dimension == invariant_dimension; }
};

struct SymmetricModuleReport {
    std::size_t rank = 0;
    unsigned max_degree = 0;
    std::vector<ModuleGenerator> generators;
    std::vector<SaturationEntry> saturation;
    // Largest exponent of each e_{p,q} among the selected generators.
    std::map<std::pair<unsigned, unsigned>, unsigned> exponent_bounds;

    bool all_saturated() const
    {
        for (const auto& s : saturation)
            if (!s.saturated()) return false;
        return true;
    }
};

inline std::vector<YZPolynomial> elementary_coefficient_generators(std::size_t d)
{
    std::vector<YZPolynomial> out;
    for (std::size_t k = 1; k <= d; ++k) out.push_back(elementary_symmetric(Alphabet::Y, d, k));
    for (std::size_t k = 1; k <= d; ++k) out.push_back(elementary_symmetric(Alphabet::Z, d, k));
    return out;
}

/// Candidate module generators of (R_d^2)^{S_d} of exact degree n, in
/// selection order: first e_p(Y)e_q(Z) by increasing p, then the products
/// prod e_{p,q}^{k_{p,q}} (sum k >= 1) with exponent vectors in decreasing
/// lexicographic order over the pairs (p,q) sorted increasingly.
inline std::vector<ModuleGenerator> symmetric_module_candidates(std::size_t d, unsigned n)
{
    std::vector<ModuleGenerator> out;
    for (unsigned p = 1; p <= d; ++p) {
        if (n <= p || n - p > d) continue;
        const unsigned q = n - p;
        const auto ty = SymmetricGeneratorTag::e_y(d, p);
        const auto tz = SymmetricGeneratorTag::e_z(d, q);
        out.push_back({{{ty, 1}, {tz, 1}}, ty.value(d) * tz.value(d), n});
    }
    std::vector<SymmetricGeneratorTag> pols;
    for (unsigned p = 1; p < d; ++p)
        for (unsigned q = 1; p + q <= d; ++q) pols.push_back(SymmetricGeneratorTag::e_pq(d, p, q));
    std::vector<unsigned> exps(pols.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i == pols.size()) {
            if (left != 0) return;
            ModuleGenerator g{{}, YZPolynomial::constant(d, 1), n};
            for (std::size_t j = 0; j < pols.size(); ++j)
                if (exps[j] > 0) {
                    g.factors.emplace_back(pols[j], exps[j]);
                    g.value *= pow(pols[j].value(d), exps[j]);
                }
            out.push_back(std::move(g));
            return;
        }
        const unsigned deg = pols[i].degree();
        for (unsigned e = left / deg + 1; e-- > 0;) {
            exps[i] = e;
            self(self, i + 1, left - e * deg);
        }
        exps[i] = 0;
    };
    if (!pols.empty() && n >= 2) rec(rec, 0, n);
    return out;
}

/// Greedy discovery of generators of (R_d^2)^{S_d} as a module over
/// K[Y_d]^{S_d} K[Z_d]^{S_d}: candidates are visited by increasing degree up
/// to max_degree and kept when they enlarge the module span in some degree.
/// The report compares the final span with the Reynolds dimension of the
/// invariants in every degree 2..max_degree.
inline SymmetricModuleReport symmetric_module_generators(std::size_t d, unsigned max_degree)
{
    if (d < 2 || max_degree < 2) throw DomainError("symmetric_module_generators: need d >= 2 and max_degree >= 2");
    const auto coeffs = elementary_coefficient_generators(d);
    ModuleSpanner spanner(d, coeffs, 2, max_degree);
    SymmetricModuleReport report;
    report.rank = d;
    report.max_degree = max_degree;
    for (unsigned n = 2; n <= max_degree; ++n)
        for (auto& cand : symmetric_module_candidates(d, n))
            if (spanner.add_generator(cand.value)) {
                for (const auto& [tag, e] : cand.factors)
                    if (tag.kind == SymmetricGeneratorTag::Kind::EPQ) {
                        auto& bound = report.exponent_bounds[{tag.p, tag.q}];
                        bound = std::max(bound, e);
                    }
                report.generators.push_back(std::move(cand));
            }
    const FiniteGroup Sd = symmetric_group(d);
    for (unsigned n = 2; n <= max_degree; ++n)
        report.saturation.push_back({n, spanner.dimension(n), invariant_dimension(Sd, n)});
    return report;
}

} // namespace bicomm

#endif
