#pragma once

// Slow reference computations used only by the tests. Each one takes a
// different route from the library code it checks.

#include "frobsum/frobsum.hpp"

#include <functional>
#include <map>
#include <vector>

namespace oracle {

using frobsum::BigInt;
using frobsum::WeightChar;

// Character of S_d by convolving n copies of k[x, y].
inline std::vector<WeightChar> char_S_by_convolution(int n, int D)
{
    std::vector<WeightChar> acc(static_cast<std::size_t>(D + 1));
    acc[0] = WeightChar::monomial(0);
    for (int copy = 0; copy < n; ++copy) {
        std::vector<WeightChar> next(static_cast<std::size_t>(D + 1));
        for (int d = 0; d <= D; ++d) {
            for (int e = 0; d + e <= D; ++e) next[static_cast<std::size_t>(d + e)] += acc[static_cast<std::size_t>(d)] * frobsum::weyl_char(e);
        }
        acc = std::move(next);
    }
    return acc;
}

// Multiplicity of L(q) in L(i_1) * ... * L(i_k), folding the pairwise fusion rule.
inline std::map<int, BigInt> fuse_tuple(int p, const std::vector<int>& weights)
{
    std::map<int, BigInt> cur{{0, 1}};
    for (int w : weights) {
        std::map<int, BigInt> next;
        for (const auto& [q, m] : cur) {
            for (const auto& [key, k] : frobsum::fusion_product(p, q, w).entries) next[key.first] += m * k;
        }
        cur = std::move(next);
    }
    return cur;
}

// Graded fusion power by enumerating all (p-1)^n tuples.
inline frobsum::SimpleGradedMultiset fusion_power_by_tuples(int p, int n)
{
    frobsum::SimpleGradedMultiset out;
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            int d = 0;
            for (int x : t) d += x;
            for (const auto& [q, m] : fuse_tuple(p, t)) out.add(q, d, m);
            return;
        }
        for (int x = 0; x <= p - 2; ++x) {
            t[static_cast<std::size_t>(i)] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// Coefficients of N(t)/(1-t)^m by repeated prefix sums.
inline std::vector<BigInt> divide_by_one_minus_t(std::vector<BigInt> num, int m, int D)
{
    num.resize(static_cast<std::size_t>(D + 1));
    for (int r = 0; r < m; ++r) {
        for (int d = 1; d <= D; ++d) num[static_cast<std::size_t>(d)] += num[static_cast<std::size_t>(d - 1)];
    }
    return num;
}

} // namespace oracle
