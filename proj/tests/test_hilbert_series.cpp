#include "frobsum/hilbert_series.hpp"
#include "frobsum/verification.hpp"
#include "oracles/naive.hpp"

#include <catch_amalgamated.hpp>

using namespace frobsum;

TEST_CASE("characters of S")
{
    CHECK(char_S_degree(1, 2) == weyl_char(2));
    CHECK(char_S_degree(2, 1) == weyl_char(1) * BigInt{2});
    const auto s42 = char_S_degree(4, 2);
    CHECK(s42 == weyl_char(2) * BigInt{10} + weyl_char(0) * BigInt{6});
    CHECK(s42.dimension() == 36);
}

TEST_CASE("closed form of char S agrees with convolution")
{
    for (int n = 1; n <= 6; ++n) {
        const auto conv = oracle::char_S_by_convolution(n, 20);
        for (int d = 0; d <= 20; ++d) {
            const auto c = char_S_degree(n, d);
            CHECK(c == conv[static_cast<std::size_t>(d)]);
            CHECK(c.dimension() == binomial(2 * n + d - 1, d));
            CHECK(c.is_symmetric());
            for (const auto& [w, k] : c.terms()) CHECK(pmod(w - d, 2) == 0);
        }
    }
}

TEST_CASE("invariant dimensions")
{
    CHECK(invariant_dim(weyl_char(0)) == 1);
    CHECK(invariant_dim(weyl_char(2)) == 0);
    CHECK(invariant_dim(weyl_char(2) * BigInt{10} + weyl_char(0) * BigInt{6}) == 6);
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= 6; ++b) {
            CHECK(invariant_dim_of_product(weyl_char(a), weyl_char(b)) == invariant_dim(weyl_char(a) * weyl_char(b)));
            CHECK(invariant_dim(weyl_char(a) * weyl_char(b)) == (a == b ? 1 : 0));
        }
    }
}

TEST_CASE("kernels K_j")
{
    const int D = 30;
    CHECK(hs_K_numerator(4, 1, D) == TruncSeries::from_coeffs(D, {4, -2}));
    const auto k41 = hs_K(4, 1, D);
    CHECK(k41[0] == 4);
    CHECK(k41[1] == 30);
    CHECK(char_K(4, 1, 1) == weyl_char(1) * BigInt{15});
    for (int n = 3; n <= 8; ++n) CHECK(hs_K_numerator(n, n - 2, D) == TruncSeries::constant(D, 1));
}

TEST_CASE("K_j: ranks, degree zero and characters")
{
    for (int n = 3; n <= 12; ++n) {
        for (int j = 1; j <= n - 2; ++j) {
            const auto num = hs_K_numerator(n, j, 20);
            BigInt at_one = 0;
            for (const auto& c : num.coeffs()) at_one += c;
            CHECK(at_one == binomial(n - 2, j));
        }
    }
    for (int n = 4; n <= 7; ++n) {
        HilbertContext ctx(n);
        for (int j = 1; j <= n - 2; ++j) {
            CHECK(ctx.K(j, 0) == weyl_char(0) * binomial(n, j + 2));
            const auto hs = hs_K(n, j, 24);
            for (int d = 0; d <= 24; ++d) {
                CHECK(ctx.K(j, d).dimension() == hs[d]);
                CHECK(ctx.K(j, d).dimension() >= 0);
                CHECK(invariant_dim(ctx.K(j, d)) >= 0);
            }
        }
    }
}

TEST_CASE("M_j: direct formula against the resolution")
{
    CHECK(hs_M(4, 1, 5)[0] == 2);
    CHECK(hs_M(4, 1, 5)[1] == 12);
    CHECK(hs_M(5, 2, 5)[2] == 75);
    for (int n = 2; n <= 8; ++n) {
        for (int j = 0; j <= n - 2; ++j) CHECK(hs_M(n, j, 40) == hs_M_euler(n, j, 40));
    }
}

TEST_CASE("modules of covariants")
{
    const int D = 40;
    // R for n = 4 is the Pluecker quadric: (1 - t^4) / (1 - t^2)^6
    const auto r4 = hs_covariant(4, 0, D);
    const auto quadric = TruncSeries::from_coeffs(D, {1, 0, 0, 0, -1}) * inverse_power_of_one_minus(D, 2, 6);
    CHECK(r4 == quadric);
    CHECK(r4[2] == 6);
    CHECK(r4[4] == 20);
    for (int n = 2; n <= 8; ++n) CHECK(hs_covariant(n, 1, 3)[1] == n);
    CHECK(hs_covariant(4, 2, 3)[1] == 0);
}

TEST_CASE("covariants: closed form agrees with characters")
{
    for (int n = 1; n <= 8; ++n) {
        HilbertContext ctx(n);
        for (int v = 0; v <= 10; ++v) {
            const auto s = hs_covariant(ctx, v, 40);
            CHECK(s == hs_covariant_closed_form(n, v, 40));
            CHECK(s[v] == binomial(n + v - 1, v));
            for (int d = 0; d < v; ++d) CHECK(s[d] == 0);
            for (int d = 0; d <= 40; ++d) {
                if ((d - v) % 2 != 0) CHECK(s[d] == 0);
            }
        }
    }
}

TEST_CASE("T{m} and K{j}")
{
    const int D = 30;
    CHECK(hs_T_brace(5, 4, 1, D) == hs_covariant(4, 1, D));
    CHECK(hs_T_brace(3, 4, 4, D) == hs_covariant(4, 4, D) + hs_covariant(4, 0, D));
    CHECK(hs_T_brace(3, 4, 0, D) == hs_covariant(4, 0, D));
    const auto kb = hs_K_brace(4, 1, D);
    CHECK(kb[1] == 0);
    CHECK(kb[3] == invariant_dim(char_K(4, 1, 3)));
    for (int n = 4; n <= 7; ++n) {
        CHECK(hs_K_brace(n, n - 2, D) == hs_covariant(n, 0, D));
        for (int j = 1; j <= n - 3; ++j) {
            const auto s = hs_K_brace(n, j, D);
            CHECK(s[0] == binomial(n, j + 2));
            for (int d = 0; d <= D; ++d) CHECK(s[d] >= 0);
        }
    }
}

TEST_CASE("series of summand lists")
{
    const int D = 20;
    SummandList empty{Level::invariants, 4, 3, {}, {}, {}};
    CHECK(hs_of_summand_list(empty, D).is_zero());

    SummandList free_one{Level::invariants, 4, 3, {{{0, 0}, 1}}, {}, {}};
    CHECK(hs_of_summand_list(free_one, D) == inverse_power_of_one_minus(D, 3, 8));

    const auto inv24 = decompose_invariants(2, 4);
    CHECK(hs_of_summand_list(inv24, D)[2] == 14);

    SummandList sheaf{Level::sheaf, 4, 3, {}, {}, {}};
    CHECK_THROWS_AS(hs_of_summand_list(sheaf, D), UnsupportedLevel);
}

TEST_CASE("ring-level Hilbert identity")
{
    for (int n : {4, 5}) {
        for (int p : {2, 3, 5}) {
            HilbertContext ctx(n);
            CHECK(hs_of_summand_list(decompose_ring(p, n), 40) == hs_R(ctx, 40));
        }
    }
}

TEST_CASE("invariants-level series numerator evaluates to the rank")
{
    // (1 - t^p)^{2n} times the series is a polynomial whose value at t = 1 is p^{2n-3}.
    for (int p : {2, 3}) {
        for (int n = 4; n <= 5; ++n) {
            const int D = 8 * n * p;
            auto num = hs_of_summand_list(decompose_invariants(p, n), D);
            for (int r = 0; r < 2 * n; ++r) num -= num.shifted(p);
            CHECK(num.max_nonzero_degree() < D / 2);
            BigInt at_one = 0;
            for (const auto& c : num.coeffs()) at_one += c;
            CHECK(at_one == ipow(p, 2 * n - 3));
        }
    }
}

TEST_CASE("a perturbed list fails the identity")
{
    auto ring = decompose_ring(3, 4);
    ring.tilt.at({0, 2}) += 1;
    const auto r = verify_ring_series(ring, 24);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_degree == 2);
}
