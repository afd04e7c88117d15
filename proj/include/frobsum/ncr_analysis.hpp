#pragma once

#include "frobsum/hilbert_series.hpp"

#include <string>
#include <vector>

namespace frobsum {

template <class Coeff>
using SeriesMatrix = std::vector<std::vector<BasicTruncSeries<Coeff>>>;

/// Hilbert series of Hom_R(M_u, M_v) for M = T{0..n-3} + K{1..n-3}, computed
/// in the regime where T(m) = S^m V.
struct HomMatrix {
    int n = 0;
    int D = 0;
    std::vector<std::string> labels;
    SeriesMatrix<BigInt> entries;

    std::size_t size() const { return labels.size(); }
};

/// Index of T{i} or K{j} in the module order T{0}, ..., T{n-3}, K{1}, ..., K{n-3}.
inline std::size_t ncr_index_T(int /*n*/, int i) { return static_cast<std::size_t>(i); }
inline std::size_t ncr_index_K(int n, int j) { return static_cast<std::size_t>(n - 2 + j - 1); }

inline HomMatrix hom_hilbert_matrix(int n, int D)
{
    if (n < 4) throw DomainError("hom_hilbert_matrix: requires n >= 4, got " + std::to_string(n));
    if (D < 1) throw DomainError("hom_hilbert_matrix: requires D >= 1");
    HomMatrix h;
    h.n = n;
    h.D = D;
    for (int i = 0; i <= n - 3; ++i) h.labels.push_back("T{" + std::to_string(i) + "}");
    for (int j = 1; j <= n - 3; ++j) h.labels.push_back("K{" + std::to_string(j) + "}");
    const std::size_t N = h.labels.size();
    h.entries.assign(N, std::vector<TruncSeries>(N, TruncSeries(D)));

    HilbertContext ctx(n);
    std::vector<WeightChar> weyl;
    for (int m = 0; m <= n; ++m) weyl.push_back(weyl_char(m));

    for (int i = 0; i <= n - 3; ++i) {
        for (int j = 0; j <= n - 3; ++j) {
            const WeightChar ij = weyl[static_cast<std::size_t>(i)] * weyl[static_cast<std::size_t>(j)];
            auto& e = h.entries[ncr_index_T(n, i)][ncr_index_T(n, j)];
            for (int d = 0; d <= D; ++d) e[d] = invariant_dim_of_product(ij, ctx.S(d));
        }
        for (int j = 1; j <= n - 3; ++j) {
            auto& tk = h.entries[ncr_index_T(n, i)][ncr_index_K(n, j)];
            for (int d = 0; d <= D; ++d) tk[d] = invariant_dim_of_product(weyl[static_cast<std::size_t>(i)], ctx.K(j, d));
            // K_j^dual = K_{n-j-2}(-2) up to a trivial twist.
            auto& kt = h.entries[ncr_index_K(n, j)][ncr_index_T(n, i)];
            for (int d = 0; d <= D; ++d) {
                kt[d] = invariant_dim_of_product(weyl[static_cast<std::size_t>(i)], ctx.K(n - j - 2, d - 2));
            }
        }
    }
    for (int i = 1; i <= n - 3; ++i) {
        for (int j = 1; j <= n - 3; ++j) {
            auto& kk = h.entries[ncr_index_K(n, i)][ncr_index_K(n, j)];
            for (int d = 0; d <= D; ++d) {
                BigInt acc = 0;
                for (int a = 0; a <= n - i - 2; ++a) {
                    const BigInt term = binomial(n, i + 2 + a) *
                                        invariant_dim_of_product(weyl[static_cast<std::size_t>(a)], ctx.K(j, d + a));
                    acc += a % 2 == 0 ? term : BigInt{-term};
                }
                kk[d] = acc;
            }
        }
    }

    for (std::size_t u = 0; u < N; ++u) {
        for (std::size_t v = 0; v < N; ++v) {
            for (int d = 0; d <= D; ++d) {
                if (h.entries[u][v][d] < 0) {
                    throw NegativeEntry("Hom(" + h.labels[u] + ", " + h.labels[v] + ") has dimension " +
                                        to_decimal(h.entries[u][v][d]) + " in degree " + std::to_string(d));
                }
            }
        }
    }
    return h;
}

namespace detail {

// Gauss-Jordan inverse over Q.
inline std::vector<std::vector<Rational>> invert_rational(std::vector<std::vector<Rational>> a)
{
    const std::size_t N = a.size();
    std::vector<std::vector<Rational>> inv(N, std::vector<Rational>(N));
    for (std::size_t i = 0; i < N; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        while (piv < N && a[piv][col] == 0) ++piv;
        if (piv == N) throw SingularConstantTerm("constant-term matrix is singular (column " + std::to_string(col) + ")");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational s = Rational{1} / a[col][col];
        for (std::size_t c = 0; c < N; ++c) {
            a[col][c] *= s;
            inv[col][c] *= s;
        }
        for (std::size_t r = 0; r < N; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c < N; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

// B_k = -B_0 sum_{i=1}^{k} H_i B_{k-i}, entries of coefficient type C.
template <class C>
SeriesMatrix<C> invert_by_recursion(const std::vector<std::vector<std::vector<C>>>& H, // [deg][u][v]
                                    const std::vector<std::vector<C>>& B0, int D)
{
    const std::size_t N = B0.size();
    std::vector<std::vector<std::vector<C>>> B(static_cast<std::size_t>(D + 1),
                                               std::vector<std::vector<C>>(N, std::vector<C>(N)));
    B[0] = B0;
    for (int k = 1; k <= D; ++k) {
        std::vector<std::vector<C>> acc(N, std::vector<C>(N));
        for (int i = 1; i <= k; ++i) {
            const auto& Hi = H[static_cast<std::size_t>(i)];
            const auto& Bk = B[static_cast<std::size_t>(k - i)];
            for (std::size_t u = 0; u < N; ++u) {
                for (std::size_t w = 0; w < N; ++w) {
                    if (Hi[u][w] == 0) continue;
                    for (std::size_t v = 0; v < N; ++v) {
                        if (Bk[w][v] != 0) acc[u][v] += Hi[u][w] * Bk[w][v];
                    }
                }
            }
        }
        auto& out = B[static_cast<std::size_t>(k)];
        for (std::size_t u = 0; u < N; ++u) {
            for (std::size_t w = 0; w < N; ++w) {
                if (B0[u][w] == 0) continue;
                for (std::size_t v = 0; v < N; ++v) {
                    if (acc[w][v] != 0) out[u][v] -= B0[u][w] * acc[w][v];
                }
            }
        }
    }
    SeriesMatrix<C> res(N, std::vector<BasicTruncSeries<C>>(N, BasicTruncSeries<C>(D)));
    for (int k = 0; k <= D; ++k) {
        for (std::size_t u = 0; u < N; ++u) {
            for (std::size_t v = 0; v < N; ++v) res[u][v][k] = B[static_cast<std::size_t>(k)][u][v];
        }
    }
    return res;
}

} // namespace detail

/// Inverse of a matrix of power series modulo t^{D+1}, over Q.
inline SeriesMatrix<Rational> invert_truncated_matrix(const SeriesMatrix<BigInt>& H, int D)
{
    const std::size_t N = H.size();
    std::vector<std::vector<Rational>> H0(N, std::vector<Rational>(N));
    for (std::size_t u = 0; u < N; ++u) {
        for (std::size_t v = 0; v < N; ++v) H0[u][v] = Rational{H[u][v][0]};
    }
    const auto B0 = detail::invert_rational(H0);

    bool integral = true;
    for (const auto& row : B0) {
        for (const auto& x : row) integral = integral && denominator(x) == 1;
    }

    if (integral) {
        // Integer constant-term inverse keeps every coefficient integral, so the
        // recursion runs on integers and is converted at the end.
        std::vector<std::vector<std::vector<BigInt>>> Hc(static_cast<std::size_t>(D + 1),
                                                         std::vector<std::vector<BigInt>>(N, std::vector<BigInt>(N)));
        for (int k = 0; k <= D; ++k) {
            for (std::size_t u = 0; u < N; ++u) {
                for (std::size_t v = 0; v < N; ++v) Hc[static_cast<std::size_t>(k)][u][v] = H[u][v][k];
            }
        }
        std::vector<std::vector<BigInt>> B0i(N, std::vector<BigInt>(N));
        for (std::size_t u = 0; u < N; ++u) {
            for (std::size_t v = 0; v < N; ++v) B0i[u][v] = numerator(B0[u][v]);
        }
        const auto Bi = detail::invert_by_recursion(Hc, B0i, D);
        SeriesMatrix<Rational> out(N, std::vector<RationalSeries>(N, RationalSeries(D)));
        for (std::size_t u = 0; u < N; ++u) {
            for (std::size_t v = 0; v < N; ++v) out[u][v] = to_rational(Bi[u][v]);
        }
        return out;
    }

    std::vector<std::vector<std::vector<Rational>>> Hc(static_cast<std::size_t>(D + 1),
                                                       std::vector<std::vector<Rational>>(N, std::vector<Rational>(N)));
    for (int k = 0; k <= D; ++k) {
        for (std::size_t u = 0; u < N; ++u) {
            for (std::size_t v = 0; v < N; ++v) Hc[static_cast<std::size_t>(k)][u][v] = Rational{H[u][v][k]};
        }
    }
    return detail::invert_by_recursion(Hc, B0, D);
}

inline SeriesMatrix<Rational> invert_truncated_matrix(const HomMatrix& H) { return invert_truncated_matrix(H.entries, H.D); }

/// Whether H * Hinv is the identity modulo t^{D+1}.
inline bool is_identity_product(const SeriesMatrix<BigInt>& H, const SeriesMatrix<Rational>& Hinv, int D)
{
    const std::size_t N = H.size();
    for (std::size_t u = 0; u < N; ++u) {
        for (std::size_t v = 0; v < N; ++v) {
            RationalSeries acc(D);
            for (std::size_t w = 0; w < N; ++w) acc += to_rational(H[u][w]) * Hinv[w][v];
            if (acc != RationalSeries::constant(D, Rational{u == v ? 1 : 0})) return false;
        }
    }
    return true;
}

struct PolynomialityReport {
    int D = 0;
    int guard = 0;
    bool polynomial = false;
    bool integral = false;
    bool nonnegative = false;
    int max_degree = -1;
    std::vector<std::vector<int>> entry_degree; // max nonzero degree per entry, -1 for zero
    std::vector<std::string> tail_entries;      // entries with a nonzero coefficient in (D-g, D]
};

/// Polynomial up to the guard band: every entry vanishes in degrees (D-g, D].
inline PolynomialityReport polynomiality_report(const SeriesMatrix<Rational>& Hinv, int D, int guard,
                                                const std::vector<std::string>& labels = {})
{
    if (guard < 0 || guard >= D) throw DomainError("polynomiality_report: need 0 <= guard < D");
    PolynomialityReport rep;
    rep.D = D;
    rep.guard = guard;
    rep.integral = true;
    rep.nonnegative = true;
    const std::size_t N = Hinv.size();
    rep.entry_degree.assign(N, std::vector<int>(N, -1));
    for (std::size_t u = 0; u < N; ++u) {
        for (std::size_t v = 0; v < N; ++v) {
            const auto& s = Hinv[u][v];
            const int deg = s.max_nonzero_degree();
            rep.entry_degree[u][v] = deg;
            rep.max_degree = std::max(rep.max_degree, deg);
            for (int d = 0; d <= D; ++d) {
                if (denominator(s[d]) != 1) rep.integral = false;
                if (s[d] < 0) rep.nonnegative = false;
            }
            if (deg > D - guard) {
                const std::string name = labels.empty() ? "(" + std::to_string(u) + "," + std::to_string(v) + ")"
                                                        : "(" + labels[u] + "," + labels[v] + ")";
                rep.tail_entries.push_back(name);
            }
        }
    }
    rep.polynomial = rep.tail_entries.empty();
    return rep;
}

} // namespace frobsum
