#pragma once

#include "frobsum/bigint.hpp"
#include "frobsum/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

namespace frobsum {

/// Power series in t known modulo t^{D+1}. Coefficients past D are unknown,
/// so reading them throws TruncationError.
template <class Coeff>
class BasicTruncSeries {
public:
    BasicTruncSeries() : BasicTruncSeries(0) {}
    explicit BasicTruncSeries(int D) : c_(static_cast<std::size_t>(check_degree(D)) + 1) {}

    static BasicTruncSeries constant(int D, const Coeff& v)
    {
        BasicTruncSeries s(D);
        s.c_[0] = v;
        return s;
    }

    /// v * t^k (zero if k > D).
    static BasicTruncSeries monomial(int D, int k, const Coeff& v = Coeff{1})
    {
        BasicTruncSeries s(D);
        if (k >= 0 && k <= D) s.c_[static_cast<std::size_t>(k)] = v;
        return s;
    }

    /// Builds a series from leading coefficients; missing ones are zero, extra ones are dropped.
    static BasicTruncSeries from_coeffs(int D, const std::vector<Coeff>& cs)
    {
        BasicTruncSeries s(D);
        for (std::size_t i = 0; i < cs.size() && i < s.c_.size(); ++i) s.c_[i] = cs[i];
        return s;
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    const Coeff& operator[](int d) const
    {
        check_index(d);
        return c_[static_cast<std::size_t>(d)];
    }

    Coeff& operator[](int d)
    {
        check_index(d);
        return c_[static_cast<std::size_t>(d)];
    }

    const std::vector<Coeff>& coeffs() const noexcept { return c_; }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const Coeff& x) { return x == 0; });
    }

    /// Highest degree with a nonzero coefficient, or -1 for the zero series.
    int max_nonzero_degree() const
    {
        for (int d = degree(); d >= 0; --d) {
            if (c_[static_cast<std::size_t>(d)] != 0) return d;
        }
        return -1;
    }

    BasicTruncSeries& operator+=(const BasicTruncSeries& o)
    {
        same_truncation(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    BasicTruncSeries& operator-=(const BasicTruncSeries& o)
    {
        same_truncation(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    BasicTruncSeries& operator*=(const Coeff& s)
    {
        for (auto& x : c_) x *= s;
        return *this;
    }

    /// this += s * t^k * o
    void add_shifted(const BasicTruncSeries& o, int k, const Coeff& s = Coeff{1})
    {
        same_truncation(o);
        if (k < 0) throw DomainError("add_shifted: negative shift");
        for (int i = 0; i + k <= degree(); ++i) {
            const auto& x = o.c_[static_cast<std::size_t>(i)];
            if (x != 0) c_[static_cast<std::size_t>(i + k)] += s * x;
        }
    }

    /// Multiplication by t^k.
    BasicTruncSeries shifted(int k) const
    {
        BasicTruncSeries r(degree());
        r.add_shifted(*this, k);
        return r;
    }

    /// Substitution t -> t^k.
    BasicTruncSeries substitute_power(int k) const
    {
        if (k < 1) throw DomainError("substitute_power: exponent must be >= 1");
        BasicTruncSeries r(degree());
        for (int i = 0; i * k <= degree(); ++i) r.c_[static_cast<std::size_t>(i * k)] = c_[static_cast<std::size_t>(i)];
        return r;
    }

    friend BasicTruncSeries operator+(BasicTruncSeries a, const BasicTruncSeries& b) { return a += b; }
    friend BasicTruncSeries operator-(BasicTruncSeries a, const BasicTruncSeries& b) { return a -= b; }
    friend BasicTruncSeries operator*(BasicTruncSeries a, const Coeff& s) { return a *= s; }
    friend BasicTruncSeries operator*(const Coeff& s, BasicTruncSeries a) { return a *= s; }

    friend BasicTruncSeries operator*(const BasicTruncSeries& a, const BasicTruncSeries& b)
    {
        a.same_truncation(b);
        BasicTruncSeries r(a.degree());
        const int D = a.degree();
        for (int i = 0; i <= D; ++i) {
            const auto& x = a.c_[static_cast<std::size_t>(i)];
            if (x == 0) continue;
            for (int j = 0; i + j <= D; ++j) {
                const auto& y = b.c_[static_cast<std::size_t>(j)];
                if (y != 0) r.c_[static_cast<std::size_t>(i + j)] += x * y;
            }
        }
        return r;
    }

    BasicTruncSeries& operator*=(const BasicTruncSeries& o) { return *this = *this * o; }

    friend bool operator==(const BasicTruncSeries& a, const BasicTruncSeries& b) { return a.c_ == b.c_; }

    /// First degree where a and b differ, or -1 if equal.
    friend int first_difference(const BasicTruncSeries& a, const BasicTruncSeries& b)
    {
        a.same_truncation(b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] != b.c_[i]) return static_cast<int>(i);
        }
        return -1;
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicTruncSeries& s)
    {
        bool first = true;
        for (int i = 0; i <= s.degree(); ++i) {
            const auto& x = s.c_[static_cast<std::size_t>(i)];
            if (x == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << to_decimal(x);
            if (i > 0) os << "*t^" << i;
        }
        if (first) os << '0';
        return os << " + O(t^" << s.degree() + 1 << ')';
    }

private:
    static int check_degree(int D)
    {
        if (D < 0) throw DomainError("truncation degree must be >= 0, got " + std::to_string(D));
        return D;
    }

    void check_index(int d) const
    {
        if (d < 0 || d > degree()) {
            throw TruncationError("coefficient t^" + std::to_string(d) + " requested, series known to degree " +
                                  std::to_string(degree()));
        }
    }

    void same_truncation(const BasicTruncSeries& o) const
    {
        if (o.degree() != degree()) {
            throw TruncationError("series truncated at " + std::to_string(degree()) + " and " +
                                  std::to_string(o.degree()) + " combined");
        }
    }

    std::vector<Coeff> c_;
};

using TruncSeries = BasicTruncSeries<BigInt>;
using RationalSeries = BasicTruncSeries<Rational>;

/// 1/(1-t^k)^m to degree D: coefficient of t^{ik} is C(m+i-1, i). Cached per (D, k, m).
inline const TruncSeries& inverse_power_of_one_minus(int D, int k, int m)
{
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, TruncSeries> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(D, k, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TruncSeries s(D);
    for (int i = 0; i * k <= D; ++i) s[i * k] = m == 0 ? BigInt{i == 0 ? 1 : 0} : binomial(m + i - 1, i);
    return cache.emplace(key, std::move(s)).first->second;
}

/// Multiplicative inverse of a series with invertible constant term.
inline RationalSeries inverse(const RationalSeries& s)
{
    if (s[0] == 0) throw SingularConstantTerm("series with zero constant term is not invertible");
    const int D = s.degree();
    RationalSeries r(D);
    const Rational c0inv = Rational{1} / s[0];
    r[0] = c0inv;
    for (int d = 1; d <= D; ++d) {
        Rational acc = 0;
        for (int i = 1; i <= d; ++i) {
            if (s[i] != 0) acc += s[i] * r[d - i];
        }
        r[d] = -acc * c0inv;
    }
    return r;
}

inline RationalSeries to_rational(const TruncSeries& s)
{
    RationalSeries r(s.degree());
    for (int d = 0; d <= s.degree(); ++d) r[d] = Rational{s[d]};
    return r;
}

} // namespace frobsum
