#ifndef BICOMM_CATALOG_HPP
#define BICOMM_CATALOG_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"

namespace bicomm {

inline FiniteGroup trivial_group(std::size_t d) { return group_closure(d, std::span<const RationalMatrix>{}); }

// <-I>, order 2.
inline FiniteGroup minus_identity_group(std::size_t d)
{
    return group_closure(d, {RationalMatrix::diagonal(std::vector<Rational>(d, Rational(-1)))});
}

// S_d as permutation matrices, generated by the adjacent transpositions.
inline FiniteGroup symmetric_group(std::size_t d)
{
    std::vector<RationalMatrix> gens;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        std::vector<std::size_t> perm(d);
        for (std::size_t j = 0; j < d; ++j) perm[j] = j;
        std::swap(perm[i], perm[i + 1]);
        gens.push_back(RationalMatrix::permutation(perm));
    }
    return group_closure(d, gens);
}

// C_4 generated by the rotation (0 -1; 1 0).
inline FiniteGroup cyclic_rotation_group()
{
    return group_closure(2, {RationalMatrix({{0, -1}, {1, 0}})});
}

// Signed permutation matrices of rank 2 (the dihedral group of order 8).
inline FiniteGroup signed_permutation_group()
{
    return group_closure(2, {RationalMatrix({{0, 1}, {1, 0}}), RationalMatrix::diagonal({-1, 1})});
}

struct CatalogEntry {
    std::string name;
    FiniteGroup group;
};

// The groups every closed formula is cross-checked on.
inline std::vector<CatalogEntry> group_catalog()
{
    return {
        {"trivial(d=1)", trivial_group(1)},
        {"trivial(d=2)", trivial_group(2)},
        {"trivial(d=3)", trivial_group(3)},
        {"minus_identity(d=1)", minus_identity_group(1)},
        {"minus_identity(d=2)", minus_identity_group(2)},
        {"S2(d=2)", symmetric_group(2)},
        {"S3(d=3)", symmetric_group(3)},
        {"C4_rotation(d=2)", cyclic_rotation_group()},
        {"signed_permutations(d=2)", signed_permutation_group()},
    };
}

inline std::vector<CatalogEntry> group_catalog(std::size_t d)
{
    std::vector<CatalogEntry> out;
    for (auto& e : group_catalog())
        if (e.group.rank() == d) out.push_back(std::move(e));
    return out;
}

} // namespace bicomm

#endif
