#pragma once

#include "frobsum/bigint.hpp"
#include "frobsum/errors.hpp"
#include "frobsum/params.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace frobsum {

/// Default memory budget of the finite-field oracle: 1 GiB.
inline constexpr std::uint64_t default_oracle_budget = std::uint64_t{1} << 30;

/// dim (S_d)^{G_1} over F_p by linear algebra: the joint kernel of
/// E = sum x_i d/dy_i and F = sum y_i d/dx_i on the weight-0-mod-p part of S_d.
///
/// Both operators preserve each pair degree d_i = deg_{x_i} + deg_{y_i}, so the
/// problem splits into blocks indexed by (d_1, ..., d_n) and by the x-degree A.
/// Permuting the pairs and swapping x with y are symmetries of the kernel
/// dimension; with `use_symmetry` only sorted compositions and A <= d/2 are
/// eliminated.
class FpKernelProblem {
public:
    FpKernelProblem(int p, int n, int d, std::uint64_t budget = default_oracle_budget, bool use_symmetry = true)
        : p_(p), n_(n), d_(d), use_symmetry_(use_symmetry)
    {
        require_prime(p);
        if (n < 1 || d < 0) throw DomainError("FpKernelProblem: need n >= 1 and d >= 0");
        const BigInt need = estimated_bytes(n, d);
        if (need > budget) {
            throw BudgetExceeded("brute-force oracle at (p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                                 ", d=" + std::to_string(d) + ") needs about " + to_decimal(need) +
                                 " bytes, budget is " + std::to_string(budget));
        }
    }

    /// Basis size of S_d times the per-monomial footprint (16n bytes).
    static BigInt estimated_bytes(int n, int d) { return binomial(2 * n + d - 1, d) * (16 * n); }

    std::uint64_t solve() const
    {
        std::uint64_t total = 0;
        std::vector<int> parts(static_cast<std::size_t>(n_));
        if (use_symmetry_) {
            enumerate_partitions(d_, 0, d_, parts, [&](const std::vector<int>& comp) {
                total += orbit_size(comp) * block_kernel(comp);
            });
        } else {
            enumerate_compositions(d_, 0, parts, [&](const std::vector<int>& comp) { total += block_kernel(comp); });
        }
        return total;
    }

private:
    using Row = std::vector<std::uint32_t>;

    // Kernel dimension of E and F on one pair-degree block, summed over admissible A.
    std::uint64_t block_kernel(const std::vector<int>& comp) const
    {
        std::uint64_t total = 0;
        for (int A = 0; A <= d_; ++A) {
            if (pmod(2 * A - d_, p_) != 0) continue;
            if (use_symmetry_ && 2 * A > d_) {
                total += slice_kernel(comp, d_ - A);
                continue;
            }
            total += slice_kernel(comp, A);
        }
        return total;
    }

    // Monomials of the block with x-degree A, as x-exponent vectors in lexicographic order.
    static std::vector<std::vector<int>> slice_basis(const std::vector<int>& comp, int A)
    {
        std::vector<std::vector<int>> out;
        std::vector<int> a(comp.size());
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i == comp.size()) {
                if (left == 0) out.push_back(a);
                return;
            }
            for (int v = 0; v <= std::min(comp[i], left); ++v) {
                a[i] = v;
                rec(i + 1, left - v);
            }
        };
        rec(0, A);
        return out;
    }

    static std::size_t index_of(const std::vector<std::vector<int>>& basis, const std::vector<int>& a)
    {
        return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), a) - basis.begin());
    }

    std::uint64_t slice_kernel(const std::vector<int>& comp, int A) const
    {
        const auto cols = slice_basis(comp, A);
        if (cols.empty()) return 0;
        const auto up = slice_basis(comp, A + 1);
        const auto down = slice_basis(comp, A - 1);
        const std::size_t nc = cols.size();
        std::vector<Row> rows(up.size() + down.size(), Row(nc, 0));
        for (std::size_t c = 0; c < nc; ++c) {
            auto a = cols[c];
            for (std::size_t i = 0; i < a.size(); ++i) {
                const int b = comp[i] - a[i];
                if (b > 0 && b % p_ != 0) { // x_i d/dy_i
                    ++a[i];
                    rows[index_of(up, a)][c] = static_cast<std::uint32_t>(b % p_);
                    --a[i];
                }
                if (a[i] > 0 && a[i] % p_ != 0) { // y_i d/dx_i
                    const auto coeff = static_cast<std::uint32_t>(a[i] % p_);
                    --a[i];
                    rows[up.size() + index_of(down, a)][c] = coeff;
                    ++a[i];
                }
            }
        }
        return nc - rank_mod_p(rows, nc);
    }

    std::size_t rank_mod_p(std::vector<Row>& rows, std::size_t nc) const
    {
        const auto P = static_cast<std::uint64_t>(p_);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < nc && rank < rows.size(); ++col) {
            std::size_t piv = rank;
            while (piv < rows.size() && rows[piv][col] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rank]);
            const std::uint64_t inv = inverse_mod(rows[rank][col]);
            for (std::size_t c = col; c < nc; ++c) rows[rank][c] = static_cast<std::uint32_t>(rows[rank][c] * inv % P);
            for (std::size_t r = rank + 1; r < rows.size(); ++r) {
                const std::uint64_t f = rows[r][col];
                if (f == 0) continue;
                for (std::size_t c = col; c < nc; ++c) {
                    rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + (P - f) * rows[rank][c]) % P);
                }
            }
            ++rank;
        }
        return rank;
    }

    std::uint64_t inverse_mod(std::uint64_t a) const
    {
        // Fermat: a^{p-2}.
        std::uint64_t r = 1;
        std::uint64_t b = a % static_cast<std::uint64_t>(p_);
        for (int e = p_ - 2; e > 0; e >>= 1) {
            if (e & 1) r = r * b % static_cast<std::uint64_t>(p_);
            b = b * b % static_cast<std::uint64_t>(p_);
        }
        return r;
    }

    // Number of distinct rearrangements of a composition.
    std::uint64_t orbit_size(const std::vector<int>& comp) const
    {
        std::uint64_t r = 1;
        std::uint64_t k = 0;
        std::vector<int> sorted = comp;
        std::sort(sorted.begin(), sorted.end());
        std::size_t i = 0;
        while (i < sorted.size()) {
            std::size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            for (std::size_t t = 1; t <= j - i; ++t) {
                ++k;
                r = r * k / t;
            }
            i = j;
        }
        return r;
    }

    // Non-increasing sequences of length n summing to d.
    template <class Fn>
    void enumerate_partitions(int left, std::size_t i, int max_part, std::vector<int>& parts, Fn&& fn) const
    {
        if (i == parts.size()) {
            if (left == 0) fn(parts);
            return;
        }
        for (int v = std::min(left, max_part); v >= 0; --v) {
            if (static_cast<long>(v) * static_cast<long>(parts.size() - i) < left) break;
            parts[i] = v;
            enumerate_partitions(left - v, i + 1, v, parts, fn);
        }
    }

    template <class Fn>
    void enumerate_compositions(int left, std::size_t i, std::vector<int>& parts, Fn&& fn) const
    {
        if (i + 1 == parts.size()) {
            parts[i] = left;
            fn(parts);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            parts[i] = v;
            enumerate_compositions(left - v, i + 1, parts, fn);
        }
    }

    int p_;
    int n_;
    int d_;
    bool use_symmetry_;
};

inline std::uint64_t bruteforce_g1_dim(int p, int n, int d, std::uint64_t budget = default_oracle_budget)
{
    return FpKernelProblem(p, n, d, budget).solve();
}

} // namespace frobsum
