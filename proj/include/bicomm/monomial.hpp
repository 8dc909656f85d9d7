#ifndef BICOMM_MONOMIAL_HPP
#define BICOMM_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace bicomm {

enum class Alphabet { Y, Z };

// Y_d^alpha Z_d^beta, stored as the concatenation (alpha, beta) of length 2d.
class Monomial {
public:
    using exponent_type = std::uint32_t;

    Monomial() = default;

    explicit Monomial(std::size_t rank) : exps_(2 * rank, 0) {}

    Monomial(std::span<const exponent_type> alpha, std::span<const exponent_type> beta)
    {
        if (alpha.size() != beta.size())
            throw RankMismatch("monomial: alpha and beta have different lengths");
        exps_.reserve(2 * alpha.size());
        exps_.insert(exps_.end(), alpha.begin(), alpha.end());
        exps_.insert(exps_.end(), beta.begin(), beta.end());
        recount();
    }

    static Monomial variable(std::size_t rank, Alphabet a, std::size_t i)
    {
        if (i >= rank) throw DomainError("monomial: variable index out of range");
        Monomial m(rank);
        m.exps_[(a == Alphabet::Y ? 0 : rank) + i] = 1;
        m.recount();
        return m;
    }

    std::size_t rank() const { return exps_.size() / 2; }

    std::span<const exponent_type> alpha() const { return {exps_.data(), rank()}; }
    std::span<const exponent_type> beta() const { return {exps_.data() + rank(), rank()}; }
    std::span<const exponent_type> exponents() const { return exps_; }

    exponent_type y_exponent(std::size_t i) const { return exps_[i]; }
    exponent_type z_exponent(std::size_t i) const { return exps_[rank() + i]; }

    unsigned y_degree() const { return ydeg_; }
    unsigned z_degree() const { return total_ - ydeg_; }
    unsigned degree() const { return total_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        if (a.exps_.size() != b.exps_.size()) throw RankMismatch("monomial product: rank mismatch");
        Monomial r;
        r.exps_.resize(a.exps_.size());
        std::transform(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), r.exps_.begin(), std::plus<>{});
        r.total_ = a.total_ + b.total_;
        r.ydeg_ = a.ydeg_ + b.ydeg_;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    std::string to_string() const
    {
        std::string out;
        auto emit = [&](char letter, std::size_t i, exponent_type e) {
            if (e == 0) return;
            if (!out.empty()) out += '*';
            out += letter;
            out += std::to_string(i + 1);
            if (e > 1) out += '^' + std::to_string(e);
        };
        for (std::size_t i = 0; i < rank(); ++i) emit('y', i, exps_[i]);
        for (std::size_t i = 0; i < rank(); ++i) emit('z', i, exps_[rank() + i]);
        return out.empty() ? "1" : out;
    }

private:
    void recount()
    {
        ydeg_ = std::accumulate(exps_.begin(), exps_.begin() + rank(), 0u);
        total_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
    }

    std::vector<exponent_type> exps_;
    unsigned total_ = 0;
    unsigned ydeg_ = 0;
};

// The canonical monomial order used for bases, echelon pivots and printing:
// total degree first, then Y-degree |alpha| ascending, then the concatenated
// exponents (alpha, beta) lexicographically with y1 > y2 > ... > z1 > ... first.
// For d = 2, n = 2 this lists y1z1, y1z2, y2z1, y2z2; for d = 1, n = 3 it
// lists y1z1^2, y1^2z1.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.y_degree() != b.y_degree()) return a.y_degree() < b.y_degree();
        const auto ea = a.exponents();
        const auto eb = b.exponents();
        return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
    }
};

// All exponent vectors of length `rank` summing to `degree`, in decreasing
// lexicographic order ((deg,0,...) first).
inline std::vector<std::vector<Monomial::exponent_type>> compositions(std::size_t rank, unsigned degree)
{
    std::vector<std::vector<Monomial::exponent_type>> out;
    if (rank == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    std::vector<Monomial::exponent_type> cur(rank, 0);
    auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos + 1 == rank) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

} // namespace bicomm

#endif
