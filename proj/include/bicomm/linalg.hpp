#ifndef BICOMM_LINALG_HPP
#define BICOMM_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace bicomm {

/*
 * Incremental row echelon form over Q for sparse vectors indexed by an
 * ordered key type (monomials, basis indices, ...).
 *
 * Rows are stored fraction-free: each is a primitive integer vector with a
 * positive leading entry, and elimination uses cross-multiplication
 *   r <- (b/g) r - (a/g) p,   g = gcd(a, b),
 * followed by content removal, so no rational division happens until the
 * reduced basis is extracted. Pivot columns are the smallest key of each row
 * under Compare.
 */
template <typename Key, typename Compare = std::less<Key>>
class SparseEchelon {
public:
    using Vector = std::map<Key, Rational, Compare>;

    // True iff v was linearly independent of the rows so far (rank grew).
    bool insert(const Vector& v)
    {
        IntRow r = reduce(to_primitive(v));
        if (r.empty()) return false;
        const Key pivot = r.front().first;
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    bool contains(const Vector& v) const { return reduce(to_primitive(v)).empty(); }

    std::size_t rank() const { return rows_.size(); }

    // Reduced row echelon basis: pivots scaled to 1, every pivot column zero in
    // all other rows; ordered by pivot.
    std::vector<Vector> reduced_basis() const
    {
        std::map<Key, Vector, Compare> reduced;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            const auto& row = it->second;
            const Rational lead(row.front().second);
            Vector v;
            for (const auto& [k, c] : row) v.emplace_hint(v.end(), k, Rational(c) / lead);
            std::vector<std::pair<Key, Rational>> hits;
            for (const auto& [k, c] : v)
                if (reduced.count(k)) hits.emplace_back(k, c);
            for (const auto& [k, c] : hits)
                for (const auto& [kk, cc] : reduced.at(k)) {
                    auto [pos, inserted] = v.try_emplace(kk, -c * cc);
                    if (!inserted) {
                        pos->second -= c * cc;
                        if (is_zero(pos->second)) v.erase(pos);
                    }
                }
            reduced.emplace(it->first, std::move(v));
        }
        std::vector<Vector> out;
        out.reserve(reduced.size());
        for (auto& [k, v] : reduced) out.push_back(std::move(v));
        return out;
    }

private:
    using IntRow = std::vector<std::pair<Key, Integer>>;

    static void make_primitive(IntRow& r)
    {
        if (r.empty()) return;
        Integer g = 0;
        for (const auto& [k, c] : r) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        if (sgn(r.front().second) < 0) g = -g;
        if (g != 1)
            for (auto& [k, c] : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }

    static IntRow to_primitive(const Vector& v)
    {
        Integer l = 1;
        for (const auto& [k, c] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        IntRow r;
        r.reserve(v.size());
        for (const auto& [k, c] : v) {
            if (is_zero(c)) continue;
            Integer e = l / c.get_den();
            e *= c.get_num();
            r.emplace_back(k, std::move(e));
        }
        make_primitive(r);
        return r;
    }

    IntRow reduce(IntRow r) const
    {
        const Compare less{};
        while (!r.empty()) {
            auto it = rows_.find(r.front().first);
            if (it == rows_.end()) break;
            const IntRow& p = it->second;
            Integer g;
            mpz_gcd(g.get_mpz_t(), r.front().second.get_mpz_t(), p.front().second.get_mpz_t());
            const Integer fr = p.front().second / g;
            const Integer fp = r.front().second / g;
            IntRow out;
            out.reserve(r.size() + p.size());
            auto a = r.begin() + 1;
            auto b = p.begin() + 1;
            while (a != r.end() || b != p.end()) {
                if (b == p.end() || (a != r.end() && less(a->first, b->first))) {
                    out.emplace_back(a->first, fr * a->second);
                    ++a;
                } else if (a == r.end() || less(b->first, a->first)) {
                    out.emplace_back(b->first, -fp * b->second);
                    ++b;
                } else {
                    Integer c = fr * a->second - fp * b->second;
                    if (sgn(c) != 0) out.emplace_back(a->first, std::move(c));
                    ++a;
                    ++b;
                }
            }
            make_primitive(out);
            r = std::move(out);
        }
        return r;
    }

    std::map<Key, IntRow, Compare> rows_;
};

// Rank of a dense rational matrix by fraction-free (Bareiss) elimination over
// Z after clearing denominators row by row.
inline std::size_t bareiss_rank(const std::vector<std::vector<Rational>>& rows)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        Integer l = 1;
        for (const auto& c : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        std::vector<Integer> r(cols);
        for (std::size_t j = 0; j < cols; ++j) r[j] = row[j].get_num() * (l / row[j].get_den());
        m.push_back(std::move(r));
    }
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t p = rank;
        while (p < m.size() && sgn(m[p][col]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer v = m[i][j] * m[rank][col] - m[i][col] * m[rank][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace bicomm

#endif
