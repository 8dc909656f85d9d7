#ifndef BICOMM_MATRIX_HPP
#define BICOMM_MATRIX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace bicomm {

// Dense square matrix over Q, row-major. As a group element g acts on
// generators by x_j -> sum_i g(i, j) x_i.
class RationalMatrix {
public:
    explicit RationalMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}

    explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows) : RationalMatrix(rows.size())
    {
        for (std::size_t i = 0; i < n_; ++i) {
            if (rows[i].size() != n_) throw DomainError("matrix is not square");
            std::copy(rows[i].begin(), rows[i].end(), a_.begin() + static_cast<std::ptrdiff_t>(i * n_));
        }
    }

    static RationalMatrix identity(std::size_t n)
    {
        RationalMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RationalMatrix diagonal(const std::vector<Rational>& diag)
    {
        RationalMatrix m(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    // Column j carries a 1 in row perm[j], so x_j -> x_{perm[j]}.
    static RationalMatrix permutation(const std::vector<std::size_t>& perm)
    {
        RationalMatrix m(perm.size());
        for (std::size_t j = 0; j < perm.size(); ++j) {
            if (perm[j] >= perm.size()) throw DomainError("permutation: index out of range");
            m(perm[j], j) = 1;
        }
        return m;
    }

    std::size_t size() const { return n_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
    {
        if (a.n_ != b.n_) throw RankMismatch("matrix product: size mismatch");
        RationalMatrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const Rational& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

    // Exact lexicographic order on the entries; only used for deduplication.
    friend bool operator<(const RationalMatrix& a, const RationalMatrix& b)
    {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return std::lexicographical_compare(a.a_.begin(), a.a_.end(), b.a_.begin(), b.a_.end());
    }

    Rational trace() const
    {
        Rational t = 0;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    // Bareiss elimination; every division is exact.
    Rational determinant() const
    {
        if (n_ == 0) return 1;
        std::vector<Rational> m = a_;
        auto at = [&](std::size_t i, std::size_t j) -> Rational& { return m[i * n_ + j]; };
        Rational prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n_; ++k) {
            if (is_zero(at(k, k))) {
                std::size_t p = k + 1;
                while (p < n_ && is_zero(at(p, k))) ++p;
                if (p == n_) return 0;
                for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n_; ++i) {
                for (std::size_t j = k + 1; j < n_; ++j)
                    at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
                at(i, k) = 0;
            }
            prev = at(k, k);
        }
        return sign * at(n_ - 1, n_ - 1);
    }

    bool is_identity() const { return *this == identity(n_); }

    // Exactly one nonzero entry per column (signed permutations, diagonals).
    bool is_monomial() const
    {
        for (std::size_t j = 0; j < n_; ++j) {
            std::size_t nz = 0;
            for (std::size_t i = 0; i < n_; ++i) nz += is_zero((*this)(i, j)) ? 0 : 1;
            if (nz != 1) return false;
        }
        return true;
    }

    std::vector<std::vector<std::string>> to_strings() const
    {
        std::vector<std::vector<std::string>> rows(n_, std::vector<std::string>(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) rows[i][j] = bicomm::to_string((*this)(i, j));
        return rows;
    }

private:
    std::size_t n_;
    std::vector<Rational> a_;
};

} // namespace bicomm

#endif
