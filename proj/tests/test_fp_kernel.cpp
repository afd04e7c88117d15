#include "frobsum/fp_kernel.hpp"
#include "frobsum/hilbert_series.hpp"

#include <catch_amalgamated.hpp>

using namespace frobsum;

TEST_CASE("brute-force invariants in low degree")
{
    for (int p : {2, 3, 5}) {
        for (int n = 1; n <= 4; ++n) {
            CHECK(bruteforce_g1_dim(p, n, 0) == 1);
            CHECK(bruteforce_g1_dim(p, n, 1) == 0);
        }
    }
    // the six Pluecker coordinates and the eight squares x_i^2, y_i^2
    CHECK(bruteforce_g1_dim(2, 4, 2) == 14);
    CHECK(bruteforce_g1_dim(5, 4, 2) == 6);
    CHECK(bruteforce_g1_dim(7, 2, 2) == 1);
}

TEST_CASE("symmetry reduction does not change the answer")
{
    for (int p : {2, 3}) {
        for (int n = 2; n <= 4; ++n) {
            for (int d = 0; d <= 7; ++d) {
                const FpKernelProblem fast(p, n, d, default_oracle_budget, true);
                const FpKernelProblem slow(p, n, d, default_oracle_budget, false);
                CHECK(fast.solve() == slow.solve());
            }
        }
    }
}

TEST_CASE("below p the invariants are the covariant ring R")
{
    for (int n = 2; n <= 4; ++n) {
        const auto r = hs_covariant(n, 0, 4);
        for (int d = 0; d <= 4; ++d) CHECK(BigInt{bruteforce_g1_dim(7, n, d)} == r[d]);
    }
}

TEST_CASE("budget is enforced")
{
    CHECK(FpKernelProblem::estimated_bytes(4, 2) == binomial(9, 2) * 64);
    CHECK_THROWS_AS(bruteforce_g1_dim(2, 4, 24, 1000), BudgetExceeded);
    CHECK_THROWS_AS(FpKernelProblem(4, 2, 2), DomainError);
}
