// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <bicomm/bicomm.hpp>

#include "test_support.hpp"

using namespace bicomm;

namespace {

// Each criterion returns an empty string on success, otherwise what went wrong.
using Criterion = std::function<std::string()>;

std::string str(std::size_t n) { return std::to_string(n); }

std::vector<CatalogEntry> catalog() { return group_catalog(); }

std::string molien_bicomm_oracle()
{
    for (const auto& [name, G] : catalog()) {
        const auto s = expand(molien_bicomm(G), 10);
        for (unsigned n = 1; n <= 10; ++n) {
            const auto dim = invariant_dimension(G, n);
            if (s[n] != Rational(static_cast<unsigned long>(dim)))
                return name + " n=" + str(n) + ": series " + to_string(s[n]) + " vs Reynolds " + str(dim);
        }
    }
    return {};
}

std::string molien_classic_oracle()
{
    for (const auto& [name, G] : catalog()) {
        const auto s = expand(molien_classic(G), 10);
        for (unsigned n = 0; n <= 10; ++n) {
            const auto dim = polynomial_invariant_dimension(G, n);
            if (s[n] != Rational(static_cast<unsigned long>(dim)))
                return name + " n=" + str(n) + ": series " + to_string(s[n]) + " vs Reynolds " + str(dim);
        }
    }
    return {};
}

std::string trivial_consistency()
{
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto free = hilbert_free_bicomm(d);
        if (!(molien_bicomm(trivial_group(d)) == free)) return "d=" + str(d) + ": rational functions differ";
        const auto s = expand(free, 10);
        for (unsigned n = 1; n <= 10; ++n)
            if (s[n] != Rational(static_cast<unsigned long>(dim_component(d, n))))
                return "d=" + str(d) + " n=" + str(n) + ": coefficient differs from dim_component";
    }
    return {};
}

std::string bicommutativity()
{
    std::mt19937 rng(20240611);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t d = 1 + i % 4;
        const auto a = fixtures::random_element(rng, d), b = fixtures::random_element(rng, d),
                   c = fixtures::random_element(rng, d);
        if (!((a * b) * c == (a * c) * b)) return "right-commutativity fails on triple " + str(i);
        if (!(a * (b * c) == b * (a * c))) return "left-commutativity fails on triple " + str(i);
        const auto p = fixtures::random_element(rng, d, false), q = fixtures::random_element(rng, d, false),
                   r = fixtures::random_element(rng, d, false);
        if (!(p * q == q * p)) return "bulk elements fail to commute on sample " + str(i);
        if (!((p * q) * r == p * (q * r))) return "bulk elements fail to associate on sample " + str(i);
    }
    for (std::size_t d = 2; d <= 6; ++d) {
        const auto x1 = BicommElement::x(d, 0), x2 = BicommElement::x(d, 1);
        if (x1 * (x2 * x2) == (x2 * x2) * x1) return "x1(x2x2) = (x2x2)x1 in rank " + str(d);
    }
    return {};
}

std::string reynolds_suite()
{
    std::mt19937 rng(99);
    for (const auto& [name, G] : catalog()) {
        const std::size_t d = G.rank();
        for (int i = 0; i < 20; ++i) {
            const auto a = fixtures::random_element(rng, d);
            const auto ra = reynolds(G, a);
            if (!(reynolds(G, ra) == ra)) return name + ": Reynolds operator is not idempotent";
            for (const auto& g : G.elements())
                if (!(act(g, ra) == ra)) return name + ": Reynolds image is not fixed";
        }
        Rational avg = 0;
        for (const auto& g : G.elements()) avg += g.trace();
        avg /= static_cast<unsigned long>(G.order());
        if (avg != Rational(static_cast<unsigned long>(invariant_dimension(G, 1))))
            return name + ": linear invariants " + str(invariant_dimension(G, 1)) + " vs average trace " + to_string(avg);
    }
    return {};
}

std::string nonfg()
{
    const auto S2 = symmetric_group(2);
    const auto lin = invariant_basis(S2, 1);
    const auto sub = subalgebra_span_dimension(2, lin.elements, 2);
    const auto inv = invariant_dimension(S2, 2);
    if (sub != 1 || inv != 2) return "S2 degree 2: subalgebra " + str(sub) + ", invariants " + str(inv);
    for (const auto& [name, G] : catalog()) {
        if (G.is_trivial()) continue;
        const auto r = nonfg_witness(G, 3, 8);
        if (!r.gap_for_every_cutoff()) {
            for (const auto& c : r.cutoffs)
                if (!c.gap_degree) return name + ": no gap up to degree 8 for cutoff " + str(c.cutoff);
        }
    }
    return {};
}

std::string integrality()
{
    const std::pair<std::string, FiniteGroup> groups[] = {{"S2", symmetric_group(2)}, {"-I d=1", minus_identity_group(1)}};
    for (const auto& [name, G] : groups)
        for (auto alphabet : {Alphabet::Y, Alphabet::Z})
            for (std::size_t i = 0; i < G.rank(); ++i) {
                const Variable v{alphabet, i};
                const auto dep = integral_dependence_polynomial(G, v);
                if (dep.degree() != G.order()) return name + ": wrong degree for " + v.to_string();
                if (!dep.evaluate(YZPolynomial::variable(G.rank(), alphabet, i)).is_zero())
                    return name + ": polynomial does not vanish at " + v.to_string();
                for (const auto& c : dep.coefficients)
                    for (const auto& g : G.elements())
                        if (!(act_bulk(g, c) == c)) return name + ": coefficient " + c.to_string() + " is not invariant";
            }
    return {};
}

std::string d2_identity()
{
    const auto r = verify_d2_identity();
    if (!r.holds()) return "difference " + r.difference.to_string();
    if (r.reading != "e_2(Z_2)") return "unexpected reading " + r.reading;
    return {};
}

std::string saturation()
{
    const std::size_t d = 2;
    const auto S2 = symmetric_group(d);
    const auto coeffs = elementary_coefficient_generators(d);
    std::vector<YZPolynomial> gens{polarized_elementary(d, 1, 1)};
    for (unsigned p = 1; p <= d; ++p)
        for (unsigned q = 1; q <= d; ++q)
            gens.push_back(elementary_symmetric(Alphabet::Y, d, p) * elementary_symmetric(Alphabet::Z, d, q));
    ModuleSpanner s(d, coeffs, 2, 10);
    for (const auto& g : gens) s.add_generator(g);
    for (unsigned n = 2; n <= 10; ++n)
        if (s.dimension(n) != invariant_dimension(S2, n))
            return "d=2 degree " + str(n) + ": span " + str(s.dimension(n)) + " vs invariants " + str(invariant_dimension(S2, n));
    if (s.dimension(4) != 13) return "d=2 degree 4 should have dimension 13";
    const auto r3 = symmetric_module_generators(3, 8);
    for (const auto& e : r3.saturation)
        if (!e.saturated())
            return "d=3 degree " + str(e.degree) + ": span " + str(e.span_dimension) + " vs invariants " +
                   str(e.invariant_dimension);
    return {};
}

std::string dicks_formanek_regression()
{
    using P = UniPolynomial;
    if (!(dicks_formanek(minus_identity_group(1)) == RationalFunction(P{1}, P{1, 0, -1})))
        return "<-I> d=1 gives " + dicks_formanek(minus_identity_group(1)).to_string();
    if (!(dicks_formanek(symmetric_group(2)) == RationalFunction(P{1, -1}, P{1, -2})))
        return "S2 gives " + dicks_formanek(symmetric_group(2)).to_string();
    return {};
}

} // namespace

int main()
{
    const std::pair<const char*, Criterion> criteria[] = {
        {"bicommutative Molien series matches Reynolds dimensions, n=1..10", molien_bicomm_oracle},
        {"classical Molien series matches commutative invariants, n<=10", molien_classic_oracle},
        {"trivial group reproduces the free series and dim_component, d=1..4", trivial_consistency},
        {"bicommutative identities on 1000 triples; noncommutativity gadget", bicommutativity},
        {"Reynolds idempotence, fixedness, linear invariants = average trace", reynolds_suite},
        {"non-finite-generation gaps for every cutoff <= 3 within degree 8", nonfg},
        {"integral dependence certificates for S2 and <-I>", integrality},
        {"rank-2 symmetric identity under the e_2(Z_2) reading", d2_identity},
        {"module saturation: d=2 degrees 2..10, d=3 degrees 2..8", saturation},
        {"Dicks-Formanek regressions for <-I> and S2", dicks_formanek_regression},
    };
    int failed = 0, index = 0;
    for (const auto& [title, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            problem = check();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] AC%d %s (%.2fs)%s%s\n", problem.empty() ? "PASS" : "FAIL", index, title, secs,
                    problem.empty() ? "" : ": ", problem.c_str());
        std::fflush(stdout);
        failed += !problem.empty();
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
