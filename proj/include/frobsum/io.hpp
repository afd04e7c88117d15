#pragma once

#include "frobsum/frobenius_decomposition.hpp"

#include "json.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace frobsum {

using json = nlohmann::ordered_json;

/// One row of a rendered summand list: {kind, param, shift_or_twist, mult}.
struct SummandRow {
    std::string kind; // T, K, O, Tm, wedgeR
    int param = 0;
    int shift_or_twist = 0;
    BigInt mult;
};

inline std::vector<SummandRow> summand_rows(const SummandList& list)
{
    std::vector<SummandRow> rows;
    for (const auto& [key, mult] : list.tilt) rows.push_back({"T", key.first, key.second, mult});
    for (const auto& [key, mult] : list.k) rows.push_back({"K", key.first, key.second, mult});
    for (const auto& [s, mult] : list.sheaf) {
        switch (s.kind) {
        case SheafKind::O: rows.push_back({"O", 0, s.twist, mult}); break;
        case SheafKind::Tm: rows.push_back({"Tm", s.param, s.twist, mult}); break;
        case SheafKind::WedgeR: rows.push_back({"wedgeR", s.param, s.twist, mult}); break;
        }
    }
    return rows;
}

inline std::string row_label(Level level, const SummandRow& r)
{
    if (r.kind == "T") {
        const std::string m = std::to_string(r.param);
        const std::string base = level == Level::invariants ? "T(" + m + ")" : "T{" + m + "}";
        return base + "(-" + std::to_string(r.shift_or_twist) + ")";
    }
    if (r.kind == "K") {
        const std::string j = std::to_string(r.param);
        const std::string base = level == Level::invariants ? "K_" + j : "K{" + j + "}";
        return base + "(-" + std::to_string(r.shift_or_twist) + ")";
    }
    if (r.kind == "O") return to_string(SheafSummand::O(r.shift_or_twist));
    if (r.kind == "Tm") return to_string(SheafSummand::T(r.param, r.shift_or_twist));
    return to_string(SheafSummand::WedgeR(r.param, r.shift_or_twist));
}

inline json to_json(const SummandList& list)
{
    json j;
    j["n"] = list.n;
    j["p"] = list.p;
    j["level"] = to_string(list.level);
    json arr = json::array();
    for (const auto& r : summand_rows(list)) {
        arr.push_back({{"kind", r.kind}, {"param", r.param}, {"shift_or_twist", r.shift_or_twist},
                       {"mult", to_decimal(r.mult)}});
    }
    j["summands"] = std::move(arr);
    j["rank_sum"] = to_decimal(list.rank_sum());
    return j;
}

inline SummandList summand_list_from_json(const json& j)
{
    SummandList list;
    list.n = j.at("n").get<int>();
    list.p = j.at("p").get<int>();
    list.level = parse_level(j.at("level").get<std::string>());
    for (const auto& e : j.at("summands")) {
        const std::string kind = e.at("kind").get<std::string>();
        const int param = e.at("param").get<int>();
        const int st = e.at("shift_or_twist").get<int>();
        const BigInt mult{e.at("mult").get<std::string>()};
        if (kind == "T") list.tilt[{param, st}] = mult;
        else if (kind == "K") list.k[{param, st}] = mult;
        else if (kind == "O") list.sheaf[SheafSummand::O(st)] = mult;
        else if (kind == "Tm") list.sheaf[SheafSummand::T(param, st)] = mult;
        else if (kind == "wedgeR") list.sheaf[SheafSummand::WedgeR(param, st)] = mult;
        else throw DomainError("unknown summand kind '" + kind + "'");
    }
    const BigInt rank{j.at("rank_sum").get<std::string>()};
    if (rank != list.rank_sum()) throw DomainError("rank_sum field disagrees with the listed summands");
    return list;
}

inline void write_csv(std::ostream& os, const SummandList& list)
{
    os << "kind,param,shift_or_twist,mult\n";
    for (const auto& r : summand_rows(list)) {
        os << r.kind << ',' << r.param << ',' << r.shift_or_twist << ',' << to_decimal(r.mult) << '\n';
    }
}

inline void write_text(std::ostream& os, const SummandList& list)
{
    os << "Gr(2," << list.n << ") p=" << list.p << " level=" << to_string(list.level) << '\n';
    const auto rows = summand_rows(list);
    std::size_t w = 7;
    for (const auto& r : rows) w = std::max(w, row_label(list.level, r).size());
    os << std::left << std::setw(static_cast<int>(w + 2)) << "summand" << "mult\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(static_cast<int>(w + 2)) << row_label(list.level, r) << to_decimal(r.mult) << '\n';
    }
    os << "distinct: " << list.distinct_count() << "  rank sum: " << to_decimal(list.rank_sum()) << " (expected "
       << to_decimal(list.expected_rank()) << ")\n";
}

} // namespace frobsum
