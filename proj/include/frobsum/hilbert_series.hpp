#pragma once

#include "frobsum/char_calculus.hpp"
#include "frobsum/frobenius_decomposition.hpp"
#include "frobsum/trunc_series.hpp"

#include <map>
#include <vector>

namespace frobsum {

/// Character of S_d for S = Sym(F (x) V), dim F = n: weight 2a-d carries
/// C(n+a-1, a) * C(n+d-a-1, d-a).
inline WeightChar char_S_degree(int n, int d)
{
    if (n < 1 || d < 0) throw DomainError("char_S_degree: need n >= 1 and d >= 0");
    WeightChar c;
    for (int a = 0; a <= d; ++a) c.add(2 * a - d, binomial(n + a - 1, a) * binomial(n + d - a - 1, d - a));
    return c;
}

/// Per-degree characters of S and of the kernels K_j for fixed n, memoized.
/// Not safe for concurrent use; give each thread its own context.
class HilbertContext {
public:
    explicit HilbertContext(int n) : n_(n)
    {
        if (n < 1) throw DomainError("HilbertContext: n must be >= 1");
    }

    int n() const noexcept { return n_; }

    const WeightChar& S(int d)
    {
        if (d < 0) return zero_;
        while (static_cast<int>(s_.size()) <= d) s_.push_back(char_S_degree(n_, static_cast<int>(s_.size())));
        return s_[static_cast<std::size_t>(d)];
    }

    /// char (K_j)_d = sum_{i=0}^{n-j-2} (-1)^i C(n, j+2+i) weyl(i) char S_{d-i}.
    const WeightChar& K(int j, int d)
    {
        if (j < 1 || j > n_ - 2) throw DomainError("char_K: need 1 <= j <= n-2, got j=" + std::to_string(j));
        if (d < 0) return zero_;
        auto& col = k_[j];
        while (static_cast<int>(col.size()) <= d) {
            const int e = static_cast<int>(col.size());
            WeightChar c;
            for (int i = 0; i <= n_ - j - 2 && i <= e; ++i) {
                BigInt coeff = binomial(n_, j + 2 + i);
                if (i % 2 == 1) coeff = -coeff;
                c.add_scaled(weyl_char(i) * S(e - i), coeff);
            }
            col.push_back(std::move(c));
        }
        return col[static_cast<std::size_t>(d)];
    }

private:
    int n_;
    WeightChar zero_;
    std::vector<WeightChar> s_;
    std::map<int, std::vector<WeightChar>> k_;
};

inline WeightChar char_K(int n, int j, int d)
{
    HilbertContext ctx(n);
    return ctx.K(j, d);
}

/// Hilbert series of S: 1/(1-t)^{2n}.
inline TruncSeries hs_S(int n, int D) { return inverse_power_of_one_minus(D, 1, 2 * n); }

/// Numerator of the Hilbert series of K_j over (1-t)^{2n}.
inline TruncSeries hs_K_numerator(int n, int j, int D)
{
    TruncSeries num(D);
    for (int i = 0; i <= n - j - 2 && i <= D; ++i) {
        BigInt c = (i + 1) * binomial(n, j + 2 + i);
        num[i] = i % 2 == 0 ? c : BigInt{-c};
    }
    return num;
}

inline TruncSeries hs_K(int n, int j, int D)
{
    if (j < 1 || j > n - 2) throw DomainError("hs_K: need 1 <= j <= n-2");
    return hs_K_numerator(n, j, D) * hs_S(n, D);
}

/// dim (M_j)_d = (j+d+1) C(n-1+d, d).
inline TruncSeries hs_M(int n, int j, int D)
{
    if (j < 0) throw DomainError("hs_M: need j >= 0");
    TruncSeries s(D);
    for (int d = 0; d <= D; ++d) s[d] = (j + d + 1) * binomial(n - 1 + d, d);
    return s;
}

/// Euler characteristic of the resolution of M_j: S^{j-k}V (x) wedge^k F (x) S(-k)
/// in position k <= j, then D^iV (x) wedge^{j+2+i} F (x) S(-j-2-i) in position j+1+i.
inline TruncSeries hs_M_euler(int n, int j, int D)
{
    if (j < 0) throw DomainError("hs_M_euler: need j >= 0");
    TruncSeries num(D);
    for (int k = 0; k <= j && k <= D; ++k) {
        const BigInt c = (j - k + 1) * binomial(n, k);
        num[k] += k % 2 == 0 ? c : BigInt{-c};
    }
    for (int i = 0; j + 2 + i <= n && j + 2 + i <= D; ++i) {
        const BigInt c = (i + 1) * binomial(n, j + 2 + i);
        num[j + 2 + i] += (j + 1 + i) % 2 == 0 ? c : BigInt{-c};
    }
    return num * hs_S(n, D);
}

/// Hilbert series of the module of covariants (S^v V (x) S)^G.
inline TruncSeries hs_covariant(HilbertContext& ctx, int v, int D)
{
    if (v < 0) throw DomainError("hs_covariant: need v >= 0");
    const WeightChar w = weyl_char(v);
    TruncSeries s(D);
    for (int d = 0; d <= D; ++d) s[d] = invariant_dim_of_product(w, ctx.S(d));
    return s;
}

inline TruncSeries hs_covariant(int n, int v, int D)
{
    HilbertContext ctx(n);
    return hs_covariant(ctx, v, D);
}

/// Closed binomial form of hs_covariant: h(v, d) - h(v+2, d) with
/// h(i, d) = C(n+q-1, q) C(n+q+i-1, q+i), q = (d-i)/2.
inline TruncSeries hs_covariant_closed_form(int n, int v, int D)
{
    if (v < 0) throw DomainError("hs_covariant_closed_form: need v >= 0");
    auto h = [n](int i, int d) -> BigInt {
        if (d < i || (d - i) % 2 != 0) return 0;
        const int q = (d - i) / 2;
        return binomial(n + q - 1, q) * binomial(n + q + i - 1, q + i);
    };
    TruncSeries s(D);
    for (int d = 0; d <= D; ++d) s[d] = h(v, d) - h(v + 2, d);
    return s;
}

/// Hilbert series of T{m} = (T(m) (x) S)^G, through the good filtration of T(m).
inline TruncSeries hs_T_brace(HilbertContext& ctx, int p, int m, int D)
{
    TruncSeries s(D);
    for (const auto& [v, k] : nabla_mults(p, m)) s += hs_covariant(ctx, v, D) * k;
    return s;
}

inline TruncSeries hs_T_brace(int p, int n, int m, int D)
{
    HilbertContext ctx(n);
    return hs_T_brace(ctx, p, m, D);
}

/// Hilbert series of K{j} = K_j^G.
inline TruncSeries hs_K_brace(HilbertContext& ctx, int j, int D)
{
    TruncSeries s(D);
    for (int d = 0; d <= D; ++d) s[d] = invariant_dim(ctx.K(j, d));
    return s;
}

inline TruncSeries hs_K_brace(int n, int j, int D)
{
    HilbertContext ctx(n);
    return hs_K_brace(ctx, j, D);
}

/// Hilbert series of R = S^G.
inline TruncSeries hs_R(HilbertContext& ctx, int D) { return hs_covariant(ctx, 0, D); }

/// Hilbert series of the module a summand list describes. At the invariants
/// level the summands are S^p-modules, at the ring level R^p-modules.
inline TruncSeries hs_of_summand_list(const SummandList& list, int D)
{
    if (list.level == Level::sheaf) {
        throw UnsupportedLevel("hs_of_summand_list: no Hilbert series at the sheaf level");
    }
    const int p = list.p;
    const int n = list.n;
    TruncSeries out(D);
    if (list.tilt.empty() && list.k.empty()) return out;
    HilbertContext ctx(n);

    std::map<int, TruncSeries> tilt_series; // per highest weight, already in t^p
    auto tilt_of = [&](int m) -> const TruncSeries& {
        auto it = tilt_series.find(m);
        if (it != tilt_series.end()) return it->second;
        TruncSeries s = list.level == Level::invariants
                            ? inverse_power_of_one_minus(D, p, 2 * n) * tilting_dim(p, m)
                            : hs_T_brace(ctx, p, m, D).substitute_power(p);
        return tilt_series.emplace(m, std::move(s)).first->second;
    };
    std::map<int, TruncSeries> k_series;
    auto k_of = [&](int j) -> const TruncSeries& {
        auto it = k_series.find(j);
        if (it != k_series.end()) return it->second;
        TruncSeries s = list.level == Level::invariants ? hs_K(n, j, D) : hs_K_brace(ctx, j, D);
        return k_series.emplace(j, s.substitute_power(p)).first->second;
    };

    for (const auto& [key, mult] : list.tilt) {
        if (key.second <= D) out.add_shifted(tilt_of(key.first), key.second, mult);
    }
    for (const auto& [key, mult] : list.k) {
        if (key.second <= D) out.add_shifted(k_of(key.first), key.second, mult);
    }
    return out;
}

} // namespace frobsum
