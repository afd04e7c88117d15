#include "frobsum/ncr_analysis.hpp"

#include <catch_amalgamated.hpp>

using namespace frobsum;

namespace {

SeriesMatrix<BigInt> diagonal(std::size_t N, const TruncSeries& s)
{
    SeriesMatrix<BigInt> m(N, std::vector<TruncSeries>(N, TruncSeries(s.degree())));
    for (std::size_t i = 0; i < N; ++i) m[i][i] = s;
    return m;
}

} // namespace

TEST_CASE("Hom matrix entries")
{
    const int D = 24;
    const auto h = hom_hilbert_matrix(4, D);
    REQUIRE(h.size() == 3);
    CHECK(h.labels == std::vector<std::string>{"T{0}", "T{1}", "K{1}"});
    CHECK(h.entries[0][0] == hs_covariant(4, 0, D));
    CHECK(h.entries[ncr_index_T(4, 0)][ncr_index_T(4, 1)][1] == 4);
    CHECK(h.entries[ncr_index_K(4, 1)][ncr_index_K(4, 1)][0] == 1);
    for (int n = 4; n <= 6; ++n) {
        const auto g = hom_hilbert_matrix(n, 12);
        for (std::size_t u = 0; u < g.size(); ++u) CHECK(g.entries[u][u][0] == 1);
        CHECK(g.entries[0][0] == hs_covariant(n, 0, 12));
        for (int i = 0; i <= n - 3; ++i) CHECK(g.entries[ncr_index_T(n, i)][0] == hs_covariant(n, i, 12));
    }
    CHECK_THROWS_AS(hom_hilbert_matrix(3, 10), DomainError);
    CHECK_THROWS_AS(hom_hilbert_matrix(4, 0), DomainError);
}

TEST_CASE("Hom from T to K and back are related by duality")
{
    // Hom(K{j}, T{i}) is Hom(T{i}, K{n-j-2}) shifted up by two
    const int D = 20;
    for (int n = 4; n <= 6; ++n) {
        const auto h = hom_hilbert_matrix(n, D);
        for (int i = 0; i <= n - 3; ++i) {
            for (int j = 1; j <= n - 3; ++j) {
                const int jd = n - j - 2;
                if (jd < 1 || jd > n - 3) continue;
                const auto& kt = h.entries[ncr_index_K(n, j)][ncr_index_T(n, i)];
                const auto& tk = h.entries[ncr_index_T(n, i)][ncr_index_K(n, jd)];
                CHECK(kt[0] == 0);
                CHECK(kt[1] == 0);
                for (int d = 2; d <= D; ++d) CHECK(kt[d] == tk[d - 2]);
            }
        }
    }
}

TEST_CASE("inverting truncated matrices")
{
    const int D = 10;
    const auto id = diagonal(3, TruncSeries::constant(D, 1));
    const auto inv = invert_truncated_matrix(id, D);
    CHECK(is_identity_product(id, inv, D));
    for (std::size_t u = 0; u < 3; ++u) CHECK(inv[u][u] == RationalSeries::constant(D, 1));

    const auto geom = diagonal(2, inverse_power_of_one_minus(D, 1, 1));
    const auto g = invert_truncated_matrix(geom, D);
    CHECK(g[0][0] == to_rational(TruncSeries::from_coeffs(D, {1, -1})));
    CHECK(g[0][1].is_zero());

    SeriesMatrix<BigInt> two = diagonal(1, TruncSeries::constant(D, 2));
    two[0][0][1] = 1;
    const auto h = invert_truncated_matrix(two, D);
    CHECK(h[0][0][0] == Rational(1, 2));
    CHECK(h[0][0][1] == Rational(-1, 4));
    CHECK(is_identity_product(two, h, D));

    CHECK_THROWS_AS(invert_truncated_matrix(diagonal(2, TruncSeries(D)), D), SingularConstantTerm);
}

TEST_CASE("inverse of the n = 5 Hom matrix is a polynomial")
{
    const int D = 60;
    const auto h = hom_hilbert_matrix(5, D);
    const auto inv = invert_truncated_matrix(h);
    CHECK(is_identity_product(h.entries, inv, D));
    const auto rep = polynomiality_report(inv, D, D / 4, h.labels);
    CHECK(rep.polynomial);
    CHECK(rep.integral);
    CHECK(rep.tail_entries.empty());
    CHECK(rep.max_degree <= D - D / 4);
}

TEST_CASE("a corrupted Hom matrix is detected")
{
    const int D = 60;
    auto h = hom_hilbert_matrix(5, D);
    h.entries[0][0][1] += 1;
    const auto inv = invert_truncated_matrix(h);
    CHECK(is_identity_product(h.entries, inv, D));
    CHECK_FALSE(polynomiality_report(inv, D, D / 4).polynomial);
    CHECK_THROWS_AS(polynomiality_report(inv, D, D), DomainError);
}
