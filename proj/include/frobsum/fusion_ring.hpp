#pragma once

#include "frobsum/char_calculus.hpp"
#include "frobsum/trunc_series.hpp"

#include <map>
#include <utility>
#include <vector>

namespace frobsum {

/// Graded object of the level p-2 fusion category: (q, d) -> multiplicity of
/// L(q) placed in degree d, with q in the alcove [0, p-2].
struct SimpleGradedMultiset {
    using Key = std::pair<int, int>; // (q, d)
    std::map<Key, BigInt> entries;

    BigInt mult(int q, int d) const
    {
        auto it = entries.find({q, d});
        return it == entries.end() ? BigInt{0} : it->second;
    }

    void add(int q, int d, const BigInt& k)
    {
        if (k == 0) return;
        auto& slot = entries[{q, d}];
        slot += k;
        if (slot == 0) entries.erase({q, d});
    }

    friend bool operator==(const SimpleGradedMultiset&, const SimpleGradedMultiset&) = default;
};

namespace detail {

inline void require_alcove(int p, int q, const char* who)
{
    if (q < 0 || q > p - 2) {
        throw DomainError(std::string(who) + ": weight " + std::to_string(q) + " outside the alcove [0, " +
                          std::to_string(p - 2) + "]");
    }
}

// Highest weights of the fusion product L(a) * L(b), each with multiplicity one.
inline std::vector<int> fusion_weights(int p, int a, int b)
{
    if (a < b) std::swap(a, b);
    const int top = a + b < p - 1 ? a + b : 2 * p - 4 - a - b;
    std::vector<int> out;
    for (int m = a - b; m <= top; m += 2) out.push_back(m);
    return out;
}

} // namespace detail

/// Fusion product of two alcove simples, all in degree 0.
inline SimpleGradedMultiset fusion_product(int p, int q1, int q2)
{
    require_prime(p);
    detail::require_alcove(p, q1, "fusion_product");
    detail::require_alcove(p, q2, "fusion_product");
    SimpleGradedMultiset out;
    for (int m : detail::fusion_weights(p, q1, q2)) out.add(m, 0, 1);
    return out;
}

/// Bilinear graded extension of the fusion product.
inline SimpleGradedMultiset fusion_multiply(int p, const SimpleGradedMultiset& a, const SimpleGradedMultiset& b)
{
    SimpleGradedMultiset out;
    for (const auto& [ka, x] : a.entries) {
        for (const auto& [kb, y] : b.entries) {
            const BigInt xy = x * y;
            for (int m : detail::fusion_weights(p, ka.first, kb.first)) out.add(m, ka.second + kb.second, xy);
        }
    }
    return out;
}

/// n-th fusion power of sum_{j=0}^{p-2} L(j) t^j.
inline SimpleGradedMultiset graded_fusion_power(int p, int n)
{
    require_prime(p);
    if (n < 1) throw DomainError("graded_fusion_power: n must be >= 1");
    SimpleGradedMultiset seed;
    for (int j = 0; j <= p - 2; ++j) seed.add(j, j, 1);
    SimpleGradedMultiset acc = seed;
    for (int i = 1; i < n; ++i) acc = fusion_multiply(p, acc, seed);
    return acc;
}

/// Generating polynomials of the trivial and of the L(p-2) row of the graded
/// fusion power. Both are known exactly (degrees at most n(p-2)).
struct APolynomials {
    TruncSeries a0;
    TruncSeries a_p2;

    /// Row indexing K_j: a0 for even j, a_{p-2} for odd j.
    const TruncSeries& for_index(int j) const { return j % 2 == 0 ? a0 : a_p2; }

    static BigInt coeff_or_zero(const TruncSeries& s, int d)
    {
        return d < 0 || d > s.degree() ? BigInt{0} : s[d];
    }
};

inline APolynomials a_polynomials(int p, int n)
{
    const auto pow = graded_fusion_power(p, n);
    const int top = n * (p - 2);
    APolynomials a{TruncSeries(top), TruncSeries(top)};
    for (const auto& [key, k] : pow.entries) {
        const auto [q, d] = key;
        if (q == 0) a.a0[d] += k;
        if (q == p - 2) a.a_p2[d] += k;
    }
    return a;
}

namespace detail {

// Boxes of letter c: x in row 2, b - x in row 1. Rows (mu1, mu2) before placing it.
inline BigInt count_tableaux(int p, const std::vector<int>& weights, std::size_t c, int mu1, int mu2, int q)
{
    if (c == weights.size()) return mu1 - mu2 == q ? 1 : 0;
    const int b = weights[c];
    BigInt total = 0;
    for (int x = 0; x <= b; ++x) {
        if (mu2 + x > mu1) break;
        const int lam1 = mu1 + b - x;
        if (lam1 - mu2 > p - 2) continue;
        total += count_tableaux(p, weights, c + 1, lam1, mu2 + x, q);
    }
    return total;
}

} // namespace detail

/// Number of p-admissible semistandard two-row tableaux with content given by
/// `weights` and row difference q: letter c occupies weights[c] boxes forming a
/// horizontal strip whose skew shape has width at most p-2.
inline BigInt tableau_count(int p, const std::vector<int>& weights, int q)
{
    require_prime(p);
    for (int w : weights) detail::require_alcove(p, w, "tableau_count");
    if (q < 0) return 0;
    return detail::count_tableaux(p, weights, 0, 0, 0, q);
}

} // namespace frobsum
