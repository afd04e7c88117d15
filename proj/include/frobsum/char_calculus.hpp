#pragma once

#include "frobsum/errors.hpp"
#include "frobsum/params.hpp"
#include "frobsum/weight_char.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace frobsum {

/// Direct sum of tilting modules: highest weight m -> multiplicity.
struct TiltingMultiset {
    std::map<int, BigInt> entries;

    BigInt mult(int m) const
    {
        auto it = entries.find(m);
        return it == entries.end() ? BigInt{0} : it->second;
    }

    void add(int m, const BigInt& k)
    {
        if (k == 0) return;
        auto& slot = entries[m];
        slot += k;
        if (slot == 0) entries.erase(m);
    }

    friend bool operator==(const TiltingMultiset&, const TiltingMultiset&) = default;
};

/// Character of the induced module S^m V: z^m + z^{m-2} + ... + z^{-m}.
inline WeightChar weyl_char(int m)
{
    if (m < 0) throw DomainError("weyl_char: negative highest weight " + std::to_string(m));
    WeightChar c;
    for (int w = -m; w <= m; w += 2) c.add(w, 1);
    return c;
}

/// Canonical digits (u_0, ..., u_k) with u = sum u_i p^i, p-1 <= u_i <= 2p-2 for
/// i < k and u_k <= p-1, where u_k < p-1 as soon as k >= 1.
inline std::vector<int> tilting_digits(int p, int u)
{
    require_prime(p);
    if (u < 0) throw DomainError("tilting_digits: negative weight " + std::to_string(u));
    std::vector<int> ds;
    int r = u;
    for (;;) {
        if (r <= p - 2 || (r == p - 1 && ds.empty())) {
            ds.push_back(r);
            return ds;
        }
        const int d = p - 1 + static_cast<int>(pmod(r - p + 1, p));
        ds.push_back(d);
        r = (r - d) / p;
    }
}

namespace detail {

// Character of T(u) for a single digit 0 <= u <= 2p-2.
inline WeightChar digit_tilting_char(int p, int u)
{
    if (u <= p - 1) return weyl_char(u);
    return weyl_char(u) + weyl_char(2 * p - 2 - u);
}

class TiltingCharCache {
public:
    static TiltingCharCache& instance()
    {
        static TiltingCharCache cache;
        return cache;
    }

    template <class Fn>
    WeightChar get(int p, int u, Fn&& compute)
    {
        const auto key = std::make_pair(p, u);
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        WeightChar c = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(c)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<int, int>, WeightChar> table_;
};

} // namespace detail

/// Character of the indecomposable tilting module T(u) in characteristic p.
inline WeightChar tilting_char(int p, int u)
{
    const auto ds = tilting_digits(p, u);
    return detail::TiltingCharCache::instance().get(p, u, [&] {
        WeightChar r = WeightChar::monomial(0);
        int scale = 1;
        for (int d : ds) {
            r = r * detail::digit_tilting_char(p, d).frobenius(scale);
            scale *= p;
        }
        return r;
    });
}

/// dim T(u): product over digits of u_i+1 (u_i <= p-1) or 2p.
inline BigInt tilting_dim(int p, int u)
{
    BigInt r = 1;
    for (int d : tilting_digits(p, u)) r *= (d <= p - 1 ? d + 1 : 2 * p);
    return r;
}

/// Good-filtration multiplicities (T(u) : nabla(v)); every value is 1.
inline std::map<int, BigInt> nabla_mults(int p, int u)
{
    const auto ds = tilting_digits(p, u);
    const std::size_t k = ds.size() - 1;
    std::vector<int> vs{0};
    int scale = 1;
    for (std::size_t j = 0; j < ds.size(); ++j) {
        std::vector<int> next;
        const bool two_choices = j < k && ds[j] != p - 1;
        for (int v : vs) {
            next.push_back(v + ds[j] * scale);
            if (two_choices) next.push_back(v + (2 * p - 2 - ds[j]) * scale);
        }
        vs = std::move(next);
        scale *= p;
    }
    std::map<int, BigInt> out;
    for (int v : vs) out[v] += 1;
    return out;
}

/// Decomposition of L(a) (x) L(b) for alcove-or-wall weights 0 <= a, b <= p-1.
inline TiltingMultiset tensor_decompose_simples(int p, int a, int b)
{
    require_prime(p);
    if (a < 0 || b < 0 || a > p - 1 || b > p - 1) {
        throw DomainError("tensor_decompose_simples: weights must lie in [0, p-1], got (" +
                          std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    if (a < b) std::swap(a, b);
    TiltingMultiset out;
    const int s = a + b;
    const int top = s < p - 1 ? s : 2 * p - 4 - s;
    for (int m = a - b; m <= top; m += 2) out.add(m, 1);
    if (s >= p - 1) {
        const int start = pmod(s - p, 2) == 0 ? p : p - 1;
        for (int m = start; m <= s; m += 2) out.add(m, 1);
    }
    return out;
}

/// Peels tilting characters off the top weight down. Throws NotTilting if a
/// forced multiplicity is negative.
inline TiltingMultiset decompose_tilting_char(int p, WeightChar c)
{
    require_prime(p);
    if (!c.has_uniform_parity()) throw DomainError("decompose_tilting_char: weights of mixed parity");
    if (!c.is_symmetric()) throw DomainError("decompose_tilting_char: character is not symmetric");
    TiltingMultiset out;
    while (!c.empty()) {
        const int m = c.top_weight();
        const BigInt k = c.coeff(m);
        if (k < 0 || m < 0) {
            throw NotTilting("decompose_tilting_char: forced multiplicity " + to_decimal(k) +
                             " at highest weight " + std::to_string(m));
        }
        out.add(m, k);
        c.add_scaled(tilting_char(p, m), -k);
    }
    return out;
}

/// Character of a tilting multiset.
inline WeightChar character_of(int p, const TiltingMultiset& t)
{
    WeightChar c;
    for (const auto& [m, k] : t.entries) c.add_scaled(tilting_char(p, m), k);
    return c;
}

inline BigInt dimension_of(int p, const TiltingMultiset& t)
{
    BigInt d = 0;
    for (const auto& [m, k] : t.entries) d += k * tilting_dim(p, m);
    return d;
}

} // namespace frobsum
