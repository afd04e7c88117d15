#pragma once

#include "frobsum/char_calculus.hpp"
#include "frobsum/fusion_ring.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace frobsum {

/// (m, d) -> multiplicity of T(m)(-d).
struct GradedTiltingDecomp {
    using Key = std::pair<int, int>; // (highest weight, degree shift)
    std::map<Key, BigInt> entries;

    BigInt mult(int m, int d) const
    {
        auto it = entries.find({m, d});
        return it == entries.end() ? BigInt{0} : it->second;
    }

    void add(int m, int d, const BigInt& k)
    {
        if (k == 0) return;
        auto& slot = entries[{m, d}];
        slot += k;
        if (slot == 0) entries.erase({m, d});
    }

    friend bool operator==(const GradedTiltingDecomp&, const GradedTiltingDecomp&) = default;
};

enum class Level { invariants, ring, sheaf };

inline std::string to_string(Level l)
{
    switch (l) {
    case Level::invariants: return "invariants";
    case Level::ring: return "ring";
    case Level::sheaf: return "sheaf";
    }
    return "?";
}

inline Level parse_level(const std::string& s)
{
    if (s == "invariants") return Level::invariants;
    if (s == "ring") return Level::ring;
    if (s == "sheaf") return Level::sheaf;
    throw DomainError("unknown level '" + s + "' (expected invariants, ring or sheaf)");
}

enum class SheafKind { O, Tm, WedgeR };

/// A twisted homogeneous bundle on Gr(2, n): O(e), T_m(e) or (wedge^j R)(e).
struct SheafSummand {
    SheafKind kind = SheafKind::O;
    int param = 0; // m for T_m, j for WedgeR_j, 0 for O
    int twist = 0;

    static SheafSummand O(int e) { return {SheafKind::O, 0, e}; }
    static SheafSummand T(int m, int e) { return m == 0 ? O(e) : SheafSummand{SheafKind::Tm, m, e}; }
    static SheafSummand WedgeR(int j, int e) { return j == 0 ? O(e) : SheafSummand{SheafKind::WedgeR, j, e}; }

    friend auto operator<=>(const SheafSummand&, const SheafSummand&) = default;
};

inline std::string to_string(const SheafSummand& s)
{
    std::string base;
    switch (s.kind) {
    case SheafKind::O: base = "O"; break;
    case SheafKind::Tm: base = "T_" + std::to_string(s.param); break;
    case SheafKind::WedgeR: base = "WedgeR_" + std::to_string(s.param); break;
    }
    if (s.twist == 0) return base;
    return base + "(" + std::to_string(s.twist) + ")";
}

/// A Frobenius-summand decomposition at one level. At the invariants and ring
/// levels `tilt` holds T(m) / T{m} entries and `k` holds K_j / K{j} entries,
/// keyed by (parameter, positive degree shift); at the sheaf level only `sheaf`
/// is populated.
struct SummandList {
    Level level = Level::invariants;
    int n = 0;
    int p = 0;
    std::map<std::pair<int, int>, BigInt> tilt;
    std::map<std::pair<int, int>, BigInt> k;
    std::map<SheafSummand, BigInt> sheaf;

    std::size_t distinct_count() const { return tilt.size() + k.size() + sheaf.size(); }

    BigInt rank_of_tilt(int m) const { return tilting_dim(p, m); }
    BigInt rank_of_k(int j) const { return binomial(n - 2, j); }

    BigInt rank_of(const SheafSummand& s) const
    {
        switch (s.kind) {
        case SheafKind::O: return 1;
        case SheafKind::Tm: return tilting_dim(p, s.param);
        case SheafKind::WedgeR: return binomial(n - 2, s.param);
        }
        return 0;
    }

    /// Sum of multiplicity times rank over all entries.
    BigInt rank_sum() const
    {
        BigInt r = 0;
        for (const auto& [key, mult] : tilt) r += mult * rank_of_tilt(key.first);
        for (const auto& [key, mult] : k) r += mult * rank_of_k(key.first);
        for (const auto& [s, mult] : sheaf) r += mult * rank_of(s);
        return r;
    }

    /// Rank the theory predicts: p^{2n-3} over R^p, p^{2(n-2)} for the sheaf.
    BigInt expected_rank() const { return level == Level::sheaf ? ipow(p, 2 * (n - 2)) : ipow(p, 2 * n - 3); }

    friend bool operator==(const SummandList&, const SummandList&) = default;
};

/// Graded tilting decomposition of S / S^p_{>0} S: the n-th tensor power of
/// sum_{e<=p-1} L(e)(-e) + sum_{e<=p-2} L(e)(-(2p-2-e)), decomposed degreewise.
inline GradedTiltingDecomp square_decomp(int p, int n)
{
    Params::make(n, p, 0);
    const int top_weight = n * (p - 1);
    const int width = 2 * top_weight + 1;
    const int top_degree = 2 * n * (p - 1);

    // One factor: degree e carries the weights of L(e) or L(2p-2-e).
    std::vector<std::vector<int>> factor(static_cast<std::size_t>(2 * p - 1));
    for (int e = 0; e <= 2 * p - 2; ++e) {
        const int m = e <= p - 1 ? e : 2 * p - 2 - e;
        for (int w = -m; w <= m; w += 2) factor[static_cast<std::size_t>(e)].push_back(w);
    }

    using Grid = std::vector<std::vector<BigInt>>; // [degree][weight + top_weight]
    Grid acc(static_cast<std::size_t>(top_degree + 1), std::vector<BigInt>(static_cast<std::size_t>(width)));
    acc[0][static_cast<std::size_t>(top_weight)] = 1;
    int reached = 0;
    for (int step = 0; step < n; ++step) {
        Grid next(acc.size(), std::vector<BigInt>(static_cast<std::size_t>(width)));
        for (int d = 0; d <= reached; ++d) {
            const auto& row = acc[static_cast<std::size_t>(d)];
            for (int wi = 0; wi < width; ++wi) {
                const BigInt& x = row[static_cast<std::size_t>(wi)];
                if (x == 0) continue;
                for (int e = 0; e <= 2 * p - 2; ++e) {
                    auto& out = next[static_cast<std::size_t>(d + e)];
                    for (int w : factor[static_cast<std::size_t>(e)]) out[static_cast<std::size_t>(wi + w)] += x;
                }
            }
        }
        acc = std::move(next);
        reached += 2 * p - 2;
    }

    GradedTiltingDecomp out;
    for (int d = 0; d <= top_degree; ++d) {
        WeightChar c;
        const auto& row = acc[static_cast<std::size_t>(d)];
        for (int wi = 0; wi < width; ++wi) c.add(wi - top_weight, row[static_cast<std::size_t>(wi)]);
        for (const auto& [m, k] : decompose_tilting_char(p, std::move(c)).entries) out.add(m, d, k);
    }
    return out;
}

/// Frobenius-kernel invariants of a graded tilting module: T(u) contributes k
/// if u = 0, T(u_1) (over the twisted group) if u = u_0 + p u_1 with low digit
/// u_0 = 2p-2, and nothing otherwise.
inline GradedTiltingDecomp g1_invariants(int p, const GradedTiltingDecomp& dec)
{
    require_prime(p);
    GradedTiltingDecomp out;
    for (const auto& [key, k] : dec.entries) {
        const auto [u, d] = key;
        if (u == 0) {
            out.add(0, d, k);
            continue;
        }
        const int u0 = u <= p - 1 ? u : p - 1 + static_cast<int>(pmod(u - p + 1, p));
        if (u0 != 2 * p - 2) continue;
        out.add((u - u0) / p, d, k);
    }
    return out;
}

/// The graded tilting module T: G_1-invariants of S / S^p_{>0} S with the
/// trivial summands wedge^j F (-jp - d), d in a_{eps_j}, removed for 1 <= j <= n-1.
inline GradedTiltingDecomp tilting_part_T(int p, int n)
{
    GradedTiltingDecomp t = g1_invariants(p, square_decomp(p, n));
    const APolynomials a = a_polynomials(p, n);
    for (int j = 1; j <= n - 1; ++j) {
        const TruncSeries& row = a.for_index(j);
        const BigInt c = binomial(n, j);
        for (int d = 0; d <= row.degree(); ++d) {
            if (row[d] == 0) continue;
            const int shift = j * p + d;
            const BigInt have = t.mult(0, shift);
            const BigInt remove = c * row[d];
            if (have < remove) {
                throw SubtractionUnderflow("tilting_part_T: removing " + to_decimal(remove) + " copies of k(-" +
                                           std::to_string(shift) + ") from " + to_decimal(have));
            }
            t.add(0, shift, -remove);
        }
    }
    return t;
}

namespace detail {

inline void require_theorem_range(int n, const char* who)
{
    if (n < 4) throw DomainError(std::string(who) + ": requires n >= 4, got " + std::to_string(n));
}

} // namespace detail

/// S^{G_1} as a graded (G^(1), S^p)-module: T(m)^Fr (x) S^p(-d) entries from the
/// tilting module T and K_j^Fr(-(p(j+2)+d)) entries indexed by a_{eps_j}.
inline SummandList decompose_invariants(int p, int n)
{
    detail::require_theorem_range(n, "decompose_invariants");
    SummandList out{Level::invariants, n, p, {}, {}, {}};
    for (const auto& [key, mult] : tilting_part_T(p, n).entries) out.tilt.emplace(key, mult);
    const APolynomials a = a_polynomials(p, n);
    for (int j = 1; j <= n - 3; ++j) {
        const TruncSeries& row = a.for_index(j);
        for (int d = 0; d <= row.degree(); ++d) {
            if (row[d] != 0) out.k.emplace(std::make_pair(j, p * (j + 2) + d), row[d]);
        }
    }
    return out;
}

/// R over R^p: same data, read as T{m}^Fr(-d) and K{j}^Fr(-c).
inline SummandList decompose_ring(int p, int n)
{
    SummandList out = decompose_invariants(p, n);
    out.level = Level::ring;
    return out;
}

/// Fr_* O_G on Gr(2, n), from the ring decomposition restricted to degrees
/// divisible by 2p.
inline SummandList sheafify(const SummandList& ring)
{
    if (ring.level == Level::sheaf) return ring;
    const int p = ring.p;
    SummandList out{Level::sheaf, ring.n, p, {}, {}, {}};
    auto put = [&](const SheafSummand& s, const BigInt& mult) {
        auto& slot = out.sheaf[s];
        slot += mult;
    };
    for (const auto& [key, mult] : ring.tilt) {
        const auto [m, d] = key;
        const int deg = m * p + d;
        if (deg % (2 * p) != 0) continue;
        put(SheafSummand::T(m, -deg / (2 * p)), mult);
    }
    for (const auto& [key, mult] : ring.k) {
        const auto [j, c] = key;
        if (c % (2 * p) != 0) continue;
        put(SheafSummand::WedgeR(j, 1 - c / (2 * p)), mult);
    }
    return out;
}

inline SummandList decompose_grassmannian(int p, int n)
{
    detail::require_theorem_range(n, "decompose_grassmannian");
    return sheafify(decompose_ring(p, n));
}

inline SummandList decompose(int p, int n, Level level)
{
    switch (level) {
    case Level::invariants: return decompose_invariants(p, n);
    case Level::ring: return decompose_ring(p, n);
    case Level::sheaf: return decompose_grassmannian(p, n);
    }
    throw UnsupportedLevel("unknown level");
}

/// Kaneda's exceptional collection on Gr(2, n), with S^i Q written as T_i.
inline std::vector<SheafSummand> kaneda_collection(int n)
{
    std::vector<SheafSummand> e;
    for (int j = 0; j <= n - 3; ++j) e.push_back(SheafSummand::WedgeR(j, -j));
    e.push_back(SheafSummand::O(-n + 1));
    for (int i = 0; i <= n - 3; ++i) {
        for (int j = 1; i + j <= n - 2; ++j) e.push_back(SheafSummand::T(i, j - n + 1));
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

struct KanedaWitness {
    bool contained = false;
    std::vector<std::pair<SheafSummand, BigInt>> found; // element of E with its multiplicity
    std::vector<SheafSummand> missing;
};

/// Whether every member of Kaneda's collection occurs in Fr_* O_G.
inline KanedaWitness contains_kaneda(int p, int n)
{
    const SummandList sheaf = decompose_grassmannian(p, n);
    KanedaWitness w;
    for (const auto& s : kaneda_collection(n)) {
        auto it = sheaf.sheaf.find(s);
        if (it == sheaf.sheaf.end()) w.missing.push_back(s);
        else w.found.emplace_back(s, it->second);
    }
    w.contained = w.missing.empty();
    return w;
}

/// Mismatches of the degree duality of the invariants-level list:
/// T(m) at d vs 2n(p-1)-d and K_j at c vs K_{n-j-2} at 2n(p-1)+2p-c.
inline std::vector<std::string> duality_violations(const SummandList& list)
{
    if (list.level == Level::sheaf) throw UnsupportedLevel("duality is checked on the invariants or ring list");
    const int top = 2 * list.n * (list.p - 1);
    std::vector<std::string> bad;
    auto lookup = [](const auto& table, int a, int b) {
        auto it = table.find({a, b});
        return it == table.end() ? BigInt{0} : it->second;
    };
    for (const auto& [key, mult] : list.tilt) {
        const auto [m, d] = key;
        const BigInt other = lookup(list.tilt, m, top - d);
        if (other != mult) {
            bad.push_back("T(" + std::to_string(m) + ") shift " + std::to_string(d) + " has " + to_decimal(mult) +
                          " but shift " + std::to_string(top - d) + " has " + to_decimal(other));
        }
    }
    for (const auto& [key, mult] : list.k) {
        const auto [j, c] = key;
        const int j2 = list.n - j - 2;
        const int c2 = top + 2 * list.p - c;
        const BigInt other = lookup(list.k, j2, c2);
        if (other != mult) {
            bad.push_back("K" + std::to_string(j) + " shift " + std::to_string(c) + " has " + to_decimal(mult) +
                          " but K" + std::to_string(j2) + " shift " + std::to_string(c2) + " has " +
                          to_decimal(other));
        }
    }
    return bad;
}

} // namespace frobsum
