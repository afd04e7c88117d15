#pragma once

#include "frobsum/bigint.hpp"

#include <map>
#include <ostream>

namespace frobsum {

/// Formal SL_2 character: a finitely supported Laurent polynomial in the weight
/// variable z, weights in units of the fundamental weight. Zero coefficients are
/// never stored, so equality is structural.
class WeightChar {
public:
    using Terms = std::map<int, BigInt>;

    WeightChar() = default;

    static WeightChar monomial(int weight, BigInt coeff = 1)
    {
        WeightChar c;
        c.add(weight, coeff);
        return c;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    BigInt coeff(int weight) const
    {
        auto it = terms_.find(weight);
        return it == terms_.end() ? BigInt{0} : it->second;
    }

    void add(int weight, const BigInt& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(weight, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int top_weight() const { return terms_.rbegin()->first; }
    int bottom_weight() const { return terms_.begin()->first; }

    /// Value at z = 1.
    BigInt dimension() const
    {
        BigInt d = 0;
        for (const auto& [w, c] : terms_) d += c;
        return d;
    }

    bool is_symmetric() const
    {
        for (const auto& [w, c] : terms_) {
            if (coeff(-w) != c) return false;
        }
        return true;
    }

    bool is_nonnegative() const
    {
        for (const auto& [w, c] : terms_) {
            if (c < 0) return false;
        }
        return true;
    }

    /// All weights share one parity (true for any character of fixed degree).
    bool has_uniform_parity() const
    {
        if (terms_.empty()) return true;
        const int par = pmod(terms_.begin()->first, 2);
        for (const auto& [w, c] : terms_) {
            if (pmod(w, 2) != par) return false;
        }
        return true;
    }

    /// Substitution z -> z^k (Frobenius twist by k = p^i on characters).
    WeightChar frobenius(int k) const
    {
        WeightChar r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w * k, c);
        return r;
    }

    WeightChar& operator+=(const WeightChar& o)
    {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }

    WeightChar& operator-=(const WeightChar& o)
    {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }

    WeightChar& operator*=(const BigInt& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    /// this += s * o
    void add_scaled(const WeightChar& o, const BigInt& s)
    {
        if (s == 0) return;
        for (const auto& [w, c] : o.terms_) add(w, c * s);
    }

    friend WeightChar operator+(WeightChar a, const WeightChar& b) { return a += b; }
    friend WeightChar operator-(WeightChar a, const WeightChar& b) { return a -= b; }
    friend WeightChar operator*(WeightChar a, const BigInt& s) { return a *= s; }
    friend WeightChar operator*(const BigInt& s, WeightChar a) { return a *= s; }

    /// Character of the tensor product.
    friend WeightChar operator*(const WeightChar& a, const WeightChar& b)
    {
        WeightChar r;
        for (const auto& [u, x] : a.terms_) {
            for (const auto& [v, y] : b.terms_) r.add(u + v, x * y);
        }
        return r;
    }

    friend bool operator==(const WeightChar& a, const WeightChar& b) { return a.terms_ == b.terms_; }

    friend std::ostream& operator<<(std::ostream& os, const WeightChar& c)
    {
        os << '{';
        bool first = true;
        for (auto it = c.terms_.rbegin(); it != c.terms_.rend(); ++it) {
            if (!first) os << ", ";
            first = false;
            os << it->first << ':' << it->second;
        }
        return os << '}';
    }

private:
    Terms terms_;
};

/// Multiplicity of the trivial module in a character with a good filtration:
/// coeff(0) - coeff(2).
inline BigInt invariant_dim(const WeightChar& c) { return c.coeff(0) - c.coeff(2); }

/// invariant_dim(a * b) without forming the product.
inline BigInt invariant_dim_of_product(const WeightChar& a, const WeightChar& b)
{
    BigInt r = 0;
    for (const auto& [u, x] : a.terms()) {
        const BigInt d = b.coeff(-u) - b.coeff(2 - u);
        if (d != 0) r += x * d;
    }
    return r;
}

} // namespace frobsum
