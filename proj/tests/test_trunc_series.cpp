#include "frobsum/trunc_series.hpp"

#include <catch_amalgamated.hpp>

using namespace frobsum;

TEST_CASE("truncated series arithmetic")
{
    const int D = 10;
    const auto one_minus_t = TruncSeries::from_coeffs(D, {1, -1});
    const auto& geom = inverse_power_of_one_minus(D, 1, 1);
    CHECK(one_minus_t * geom == TruncSeries::constant(D, 1));

    const auto& inv2 = inverse_power_of_one_minus(D, 1, 2);
    for (int d = 0; d <= D; ++d) CHECK(inv2[d] == d + 1);

    const auto& inv_p = inverse_power_of_one_minus(D, 3, 2);
    CHECK(inv_p[0] == 1);
    CHECK(inv_p[1] == 0);
    CHECK(inv_p[3] == 2);
    CHECK(inv_p[9] == 4);

    const auto s = TruncSeries::from_coeffs(D, {1, 2, 3});
    const auto sub = s.substitute_power(4);
    CHECK(sub[0] == 1);
    CHECK(sub[4] == 2);
    CHECK(sub[8] == 3);
    CHECK(sub[1] == 0);

    const auto sh = s.shifted(9);
    CHECK(sh[9] == 1);
    CHECK(sh[10] == 2);
    CHECK(sh.max_nonzero_degree() == 10);
}

TEST_CASE("truncation is enforced")
{
    TruncSeries s(5);
    CHECK_THROWS_AS(s[6], TruncationError);
    CHECK_THROWS_AS(s[-1], TruncationError);
    CHECK_THROWS_AS(s + TruncSeries(6), TruncationError);
    CHECK_THROWS_AS(TruncSeries(-1), DomainError);
}

TEST_CASE("series inverse")
{
    const int D = 12;
    const auto one_minus_t = to_rational(TruncSeries::from_coeffs(D, {1, -1}));
    const auto inv = inverse(one_minus_t);
    for (int d = 0; d <= D; ++d) CHECK(inv[d] == 1);
    CHECK(inverse(inv) == one_minus_t);

    const auto two = RationalSeries::constant(D, 2);
    CHECK(inverse(two)[0] == Rational(1, 2));
    CHECK_THROWS_AS(inverse(RationalSeries(D)), SingularConstantTerm);
}

TEST_CASE("first difference")
{
    const auto a = TruncSeries::from_coeffs(6, {1, 2, 3});
    auto b = a;
    CHECK(first_difference(a, b) == -1);
    b[4] += 1;
    CHECK(first_difference(a, b) == 4);
}
