#pragma once

#include "frobsum/errors.hpp"

#include <algorithm>
#include <string>

namespace frobsum {

constexpr bool is_prime(int p)
{
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

inline void require_prime(int p)
{
    if (!is_prime(p)) throw DomainError("characteristic p = " + std::to_string(p) + " is not prime");
}

/// Default truncation degree for Hilbert-series checks: max(4p(n-1), 40).
constexpr int default_truncation(int n, int p) { return std::max(4 * p * (n - 1), 40); }

/// Problem parameters: n copies of V (dim F = n), characteristic p, truncation degree D.
struct Params {
    int n = 4;
    int p = 2;
    int D = 40;

    static Params make(int n, int p, int D = -1)
    {
        Params r{n, p, D < 0 ? default_truncation(n, p) : D};
        r.validate();
        return r;
    }

    void validate() const
    {
        if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
        require_prime(p);
        if (D < 0) throw DomainError("truncation degree must be >= 0, got " + std::to_string(D));
    }
};

} // namespace frobsum
