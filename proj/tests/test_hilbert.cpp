#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <bicomm/catalog.hpp>
#include <bicomm/hilbert.hpp>
#include <bicomm/invariants.hpp>

#include "test_support.hpp"

using namespace bicomm;

namespace {

using P = UniPolynomial;

RationalFunction rf(P num, P den) { return {std::move(num), std::move(den)}; }

std::vector<Rational> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

// det(I - t g) at a rational point t, by Bareiss on the numeric matrix.
Rational char_det_at(const RationalMatrix& g, const Rational& t)
{
    RationalMatrix m = RationalMatrix::identity(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) m(i, j) -= t * g(i, j);
    return m.determinant();
}

} // namespace

TEST(UniPolynomial, DivisionAndGcd)
{
    const P a{-1, 0, 1};  // t^2 - 1
    const P b{1, 1};      // t + 1
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q, (P{-1, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(gcd(a, P{1, -2, 1}), (P{-1, 1}));
    EXPECT_EQ(gcd(P{2}, P{3, 1}), P{1});
    EXPECT_EQ((P{1, -1} * P{1, 1}), (P{1, 0, -1}));
    EXPECT_EQ(P({0, 0, 0}).degree(), -1);
    EXPECT_THROW(divmod(a, P{}), DomainError);
}

TEST(RationalFunction, CanonicalForm)
{
    // (1 - t^2) / (2 - 2t) = (1 + t) / 2
    const auto f = rf(P{1, 0, -1}, P{2, -2});
    EXPECT_EQ(f.numerator(), (P{Rational(1, 2), Rational(1, 2)}));
    EXPECT_EQ(f.denominator(), P{1});
    EXPECT_EQ(rf(P{}, P{5, 1}).denominator(), P{1});
    EXPECT_THROW(rf(P{1}, P{}), DomainError);
    EXPECT_THROW(rf(P{1}, P{0, 1}), DomainError);
    EXPECT_EQ(rf(P{0, 1}, P{0, 1, 1}), rf(P{1}, P{1, 1}));
}

TEST(RationalFunction, CanonicalPartsAreCoprime)
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> a(1 + rng() % 4), b(1 + rng() % 4), c(1 + rng() % 3);
        for (auto& x : a) x = fixtures::random_rational(rng);
        for (auto& x : b) x = fixtures::random_rational(rng);
        for (auto& x : c) x = fixtures::random_rational(rng);
        b[0] = c[0] = 1;
        const P common(c);
        const auto f = rf(P(a) * common, P(b) * common);
        EXPECT_EQ(f.denominator().coefficient(0), 1);
        EXPECT_EQ(gcd(f.numerator(), f.denominator()).degree(), 0);
        EXPECT_EQ(f, rf(P(a), P(b)));
    }
}

TEST(CharDet, Examples)
{
    EXPECT_EQ(char_det(RationalMatrix::identity(2)), (P{1, -2, 1}));
    EXPECT_EQ(char_det(RationalMatrix({{0, 1}, {1, 0}})), (P{1, 0, -1}));
    EXPECT_EQ(char_det(RationalMatrix({{0, -1}, {1, 0}})), (P{1, 0, 1}));
}

TEST(CharDet, PermutationMatricesFactorOverCycles)
{
    for (std::size_t d = 1; d <= 4; ++d) {
        std::vector<std::size_t> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            P expected{1};
            std::vector<bool> seen(d, false);
            for (std::size_t s = 0; s < d; ++s) {
                if (seen[s]) continue;
                std::size_t len = 0;
                for (std::size_t j = s; !seen[j]; j = perm[j]) seen[j] = true, ++len;
                expected = expected * (P{1} - P::monomial(len, 1));
            }
            EXPECT_EQ(char_det(RationalMatrix::permutation(perm)), expected);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST(CharDet, AgreesWithNumericDeterminant)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 1 + trial % 4;
        RationalMatrix g(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) g(i, j) = fixtures::random_rational(rng);
        const auto p = char_det(g);
        EXPECT_EQ(p.coefficient(0), 1);
        EXPECT_LE(p.degree(), static_cast<int>(d));
        for (int k = 0; k < 4; ++k) {
            const auto t = fixtures::random_rational(rng);
            EXPECT_EQ(p(t), char_det_at(g, t));
        }
    }
}

TEST(MolienClassic, Examples)
{
    EXPECT_EQ(molien_classic(trivial_group(2)), rf(P{1}, P{1, -2, 1}));
    EXPECT_EQ(molien_classic(symmetric_group(2)), rf(P{1}, P{1, -1} * P{1, 0, -1}));
    EXPECT_EQ(molien_classic(minus_identity_group(1)), rf(P{1}, P{1, 0, -1}));
    const auto s = expand(molien_classic(symmetric_group(2)), 5);
    EXPECT_EQ(s.coefficients, ints({1, 1, 2, 2, 3, 3}));
}

TEST(DicksFormanek, Examples)
{
    for (std::size_t d = 1; d <= 3; ++d)
        EXPECT_EQ(dicks_formanek(trivial_group(d)), rf(P{1}, P{1, -Rational(static_cast<unsigned long>(d))}));
    EXPECT_EQ(dicks_formanek(minus_identity_group(1)), rf(P{1}, P{1, 0, -1}));
    EXPECT_EQ(dicks_formanek(symmetric_group(2)), rf(P{1, -1}, P{1, -2}));
}

TEST(HilbertFreeBicomm, Examples)
{
    // d = 1: t + t^2/(1-t)^2
    EXPECT_EQ(hilbert_free_bicomm(1), RationalFunction(P{0, 1}) + rf(P{0, 0, 1}, P{1, -2, 1}));
    EXPECT_EQ(expand(hilbert_free_bicomm(1), 6).coefficients, ints({0, 1, 1, 2, 3, 4, 5}));
    const auto s2 = expand(hilbert_free_bicomm(2), 3);
    EXPECT_EQ(s2[2], 4);
    EXPECT_EQ(s2[3], 12);
    EXPECT_THROW(hilbert_free_bicomm(0), DomainError);
}

TEST(MolienBicomm, Examples)
{
    EXPECT_EQ(molien_bicomm(trivial_group(1)), RationalFunction(P{0, 1}) + rf(P{0, 0, 1}, P{1, -2, 1}));
    // <-I>, d = 1: t^2 (1 + t^2) / (1 - t^2)^2
    const auto m = molien_bicomm(minus_identity_group(1));
    EXPECT_EQ(m, rf(P{0, 0, 1, 0, 1}, P{1, 0, -2, 0, 1}));
    const auto ms = expand(m, 10);
    for (unsigned n = 1; n <= 10; ++n) EXPECT_EQ(ms[n], n % 2 ? Rational(0) : Rational(n - 1));
    EXPECT_EQ(expand(molien_bicomm(symmetric_group(2)), 6).coefficients, ints({0, 1, 2, 6, 13, 22, 36}));
}

TEST(Expand, Examples)
{
    EXPECT_EQ(expand(rf(P{1}, P{1, -1}), 3).coefficients, ints({1, 1, 1, 1}));
    EXPECT_EQ(expand(rf(P{1}, P{1, -2, 1}), 3).coefficients, ints({1, 2, 3, 4}));
    EXPECT_EQ(expand(molien_bicomm(symmetric_group(2)), 4).coefficients, ints({0, 1, 2, 6, 13}));
    EXPECT_EQ(expand(molien_bicomm(symmetric_group(2)), 4).order, 4u);
    EXPECT_THROW(expand(P{1}, P{0, 1}, 3), DomainError);
}

TEST(MolienBicomm, SummandHasNoConstantTermAndTraceAsLinearTerm)
{
    std::vector<FiniteGroup> groups;
    for (auto& e : group_catalog()) groups.push_back(e.group);
    for (const auto& G : groups)
        for (const auto& g : G.elements()) {
            const auto s = expand(molien_bicomm_summand(g), 2);
            EXPECT_EQ(s[0], 0);
            EXPECT_EQ(s[1], g.trace());
        }
}

TEST(MolienBicomm, TrivialGroupGivesFreeSeries)
{
    for (std::size_t d = 1; d <= 4; ++d) {
        EXPECT_EQ(molien_bicomm(trivial_group(d)), hilbert_free_bicomm(d));
        const auto s = expand(hilbert_free_bicomm(d), 10);
        EXPECT_EQ(s[0], 0);
        for (unsigned n = 1; n <= 10; ++n) EXPECT_EQ(s[n], Rational(static_cast<unsigned long>(dim_component(d, n))));
    }
}

TEST(MolienBicomm, MatchesReynoldsOnLowDegrees)
{
    // full n <= 10 sweep lives in the acceptance suite
    for (auto& [name, G] : group_catalog()) {
        const auto s = expand(molien_bicomm(G), 6);
        for (unsigned n = 1; n <= 6; ++n)
            EXPECT_EQ(s[n], Rational(static_cast<unsigned long>(invariant_dimension(G, n)))) << name << " n=" << n;
        const auto c = expand(molien_classic(G), 6);
        for (unsigned n = 0; n <= 6; ++n)
            EXPECT_EQ(c[n], Rational(static_cast<unsigned long>(polynomial_invariant_dimension(G, n)))) << name << " n=" << n;
    }
    // non-monomial order-3 group exercises the generic substitution path
    const auto C3 = group_closure(2, {RationalMatrix({{0, -1}, {1, -1}})});
    const auto s = expand(molien_bicomm(C3), 6);
    for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(s[n], Rational(static_cast<unsigned long>(invariant_dimension(C3, n))));
}
