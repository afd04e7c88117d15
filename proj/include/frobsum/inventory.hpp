#pragma once

#include "frobsum/frobenius_decomposition.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace frobsum {

/// Admissible summands at the invariants/ring level, keyed like SummandList::tilt
/// and SummandList::k.
struct AlgebraicRanges {
    std::set<std::pair<int, int>> tilt; // (m, d)
    std::set<std::pair<int, int>> k;    // (j, c)
};

/// Summands of S^{G_1} (equivalently R over R^p) permitted by the degree bounds.
inline AlgebraicRanges algebraic_ranges(int p, int n)
{
    AlgebraicRanges r;
    for (int d = 0; d <= 2 * n * (p - 1); d += 2) r.tilt.insert({0, d});
    for (int j = 1; j <= n - 3; ++j) {
        if (p >= 1 + ceil_div(j, n - 2 - j)) {
            for (int d = p * (j + 2) - 2; d <= p * (2 * n - 2 - j) - 2 * n + 2; ++d) {
                if (pmod(d - j * p, 2) == 0) r.tilt.insert({j, d});
            }
        }
        int lo = 0;
        int hi = 0;
        if (j % 2 == 1) {
            lo = p * (j + 3) - 2;
            hi = n % 2 == 0 ? p * (j + 1 + n) - 2 * (n - 1) : p * (j + 2 + n) - 2 * n;
        } else {
            lo = p * (j + 2);
            hi = n % 2 == 0 ? p * (j + 2 + n) - 2 * n : p * (j + 1 + n) - 2 * (n - 1);
        }
        for (int c = lo; c <= hi; ++c) {
            if (c % 2 == 0) r.k.insert({j, c});
        }
    }
    return r;
}

/// Summands of Fr_* O_G permitted by the twist bounds.
inline std::set<SheafSummand> sheaf_ranges(int p, int n)
{
    std::set<SheafSummand> s;
    for (int d = 0; d <= n - ceil_div(n, p); ++d) s.insert(SheafSummand::O(-d));
    for (int j = 1; j <= n - 3; ++j) {
        if (p >= 1 + ceil_div(j + 1, n - 2 - j)) {
            for (int d = j + 1; d <= n - 1 - ceil_div(n - 1, p); ++d) s.insert(SheafSummand::T(j, -d));
        }
        int lo = 0;
        int hi = -1;
        if (j % 2 == 1) {
            if (p > 2) {
                lo = (j + 3) / 2;
                hi = n % 2 == 0 ? (j + 1 + n) / 2 - ceil_div(n - 1, p) : (j + 2 + n) / 2 - ceil_div(n, p);
            }
        } else {
            lo = (j + 2) / 2;
            hi = n % 2 == 0 ? (j + 2 + n) / 2 - ceil_div(n, p) : (j + 1 + n) / 2 - ceil_div(n - 1, p);
        }
        for (int d = lo; d <= hi; ++d) s.insert(SheafSummand::WedgeR(j, 1 - d));
    }
    return s;
}

struct InventoryRow {
    std::string label;
    BigInt mult;   // zero when absent
    bool in_range; // permitted by the bounds
};

struct InventoryReport {
    Level level = Level::invariants;
    int n = 0;
    int p = 0;
    std::size_t distinct = 0;
    std::vector<InventoryRow> computed;    // every computed summand, in list order
    std::vector<std::string> out_of_range; // computed but not permitted
    std::vector<std::string> absent;       // permitted but not computed

    bool conforms() const { return out_of_range.empty() && absent.empty(); }
};

namespace detail {

inline std::string algebraic_label(Level level, bool is_k, int param, int shift)
{
    std::string name;
    if (level == Level::invariants) name = is_k ? "K_" + std::to_string(param) : "T(" + std::to_string(param) + ")";
    else name = is_k ? "K{" + std::to_string(param) + "}" : "T{" + std::to_string(param) + "}";
    return name + "(-" + std::to_string(shift) + ")";
}

} // namespace detail

/// Distinct summands, multiplicities and conformance with the range bounds.
/// With `strict`, a summand outside its range throws RangeViolation.
inline InventoryReport summand_inventory(const SummandList& list, bool strict = true)
{
    InventoryReport rep;
    rep.level = list.level;
    rep.n = list.n;
    rep.p = list.p;
    rep.distinct = list.distinct_count();

    if (list.level == Level::sheaf) {
        const auto allowed = sheaf_ranges(list.p, list.n);
        for (const auto& [s, mult] : list.sheaf) {
            const bool ok = allowed.count(s) > 0;
            rep.computed.push_back({to_string(s), mult, ok});
            if (!ok) rep.out_of_range.push_back(to_string(s));
        }
        for (const auto& s : allowed) {
            if (!list.sheaf.count(s)) rep.absent.push_back(to_string(s));
        }
    } else {
        const auto allowed = algebraic_ranges(list.p, list.n);
        auto scan = [&](const auto& table, const auto& permitted, bool is_k) {
            for (const auto& [key, mult] : table) {
                const std::string label = detail::algebraic_label(list.level, is_k, key.first, key.second);
                const bool ok = permitted.count(key) > 0;
                rep.computed.push_back({label, mult, ok});
                if (!ok) rep.out_of_range.push_back(label);
            }
            for (const auto& key : permitted) {
                if (!table.count(key)) {
                    rep.absent.push_back(detail::algebraic_label(list.level, is_k, key.first, key.second));
                }
            }
        };
        scan(list.tilt, allowed.tilt, false);
        scan(list.k, allowed.k, true);
    }

    if (strict && !rep.out_of_range.empty()) {
        throw RangeViolation("summand " + rep.out_of_range.front() + " lies outside its admissible range (n=" +
                             std::to_string(list.n) + ", p=" + std::to_string(list.p) + ")");
    }
    return rep;
}

/// Reference distinct-summand counts of Fr_* O_G: the closed forms for p = 2 and
/// the tabulated values 4, 7, 12, 17, 18 for p = 3 and n = 4..8. Empty elsewhere.
inline std::optional<std::size_t> reference_sheaf_count(int p, int n)
{
    if (p == 2 && n == 4) return 3;
    if (p == 2 && n >= 5) {
        const int c = n % 2 == 1 ? (n * n + 4 * n - 5) / 8 : (n * n + 2 * n - 16) / 8;
        return static_cast<std::size_t>(c);
    }
    if (p == 3 && n >= 4 && n <= 8) {
        constexpr std::size_t table[] = {4, 7, 12, 17, 18};
        return table[n - 4];
    }
    return std::nullopt;
}

} // namespace frobsum
