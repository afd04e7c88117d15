// Acceptance checks. Usage: acceptance [AC1..AC9|all]
// Prints one [PASS]/[FAIL] line per criterion; exit status is nonzero if any selected criterion fails.

#include "frobsum/frobsum.hpp"
#include "oracles/naive.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace frobsum;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void fail(const std::string& s)
    {
        ok = false;
        notes.push_back(s);
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string pair_str(int n, int p) { return "(n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")"; }

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome summand_counts()
{
    Outcome o;
    std::vector<std::tuple<int, int, std::size_t>> targets{{4, 2, 3}, {5, 3, 7}, {6, 3, 12}, {7, 3, 17}, {8, 3, 18}};
    for (int n = 5; n <= 12; ++n) {
        const int count = n % 2 == 1 ? (-5 + 4 * n + n * n) / 8 : (-16 + 2 * n + n * n) / 8;
        targets.emplace_back(n, 2, static_cast<std::size_t>(count));
    }
    for (const auto& [n, p, want] : targets) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto got = decompose_grassmannian(p, n).distinct_count();
        const double secs = seconds_since(t0);
        std::ostringstream line;
        line << pair_str(n, p) << " distinct " << got << ", expected " << want << " (" << secs << " s)";
        if (got != want) o.fail(line.str());
        else o.note(line.str());
    }

    const auto l43 = decompose_grassmannian(3, 4);
    std::ostringstream excluded;
    excluded << "(n=4, p=3) excluded: computed " << l43.distinct_count() << " distinct, reference count 4;";
    for (const auto& [s, mult] : l43.sheaf) excluded << ' ' << to_string(s) << " x" << to_decimal(mult);
    o.note(excluded.str());
    return o;
}

Outcome tilting_case_n4()
{
    Outcome o;
    const std::set<SheafSummand> want{SheafSummand::O(0),    SheafSummand::O(-1),    SheafSummand::O(-2),
                                      SheafSummand::O(-3),   SheafSummand::T(1, -2), SheafSummand::WedgeR(1, -1)};
    for (int p : {5, 7}) {
        std::set<SheafSummand> got;
        for (const auto& [s, mult] : decompose_grassmannian(p, 4).sheaf) got.insert(s);
        if (got != want) o.fail("summand set differs at " + pair_str(4, p));
    }
    for (int n = 4; n <= 8; ++n) {
        for (int p : {5, 7, 11, 13}) {
            if (p < n) continue;
            const auto w = contains_kaneda(p, n);
            if (!w.contained) o.fail("Kaneda collection missing " + std::to_string(w.missing.size()) + " at " + pair_str(n, p));
        }
    }
    return o;
}

Outcome range_conformance()
{
    Outcome o;
    for (int n = 4; n <= 8; ++n) {
        for (int p : {2, 3, 5, 7}) {
            for (const auto level : {Level::invariants, Level::ring, Level::sheaf}) {
                const auto rep = summand_inventory(decompose(p, n, level), false);
                for (const auto& s : rep.out_of_range) o.fail(to_string(level) + " " + pair_str(n, p) + " out of range: " + s);
                for (const auto& s : rep.absent) o.fail(to_string(level) + " " + pair_str(n, p) + " not realized: " + s);
            }
        }
    }
    return o;
}

Outcome hilbert_identity()
{
    Outcome o;
    const int D = 60;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n : {4, 5, 6}) {
        HilbertContext ctx(n);
        const auto r = hs_R(ctx, D);
        for (int p : {2, 3, 5}) {
            const int bad = first_difference(hs_of_summand_list(decompose_ring(p, n), D), r);
            if (bad >= 0) o.fail(pair_str(n, p) + " differs at degree " + std::to_string(bad));
        }
    }
    const double secs = seconds_since(t0);
    o.note("runtime " + std::to_string(secs) + " s");
    if (secs > 300) o.fail("runtime exceeds 5 minutes");
    return o;
}

Outcome bruteforce_oracle()
{
    Outcome o;
    const auto check = [&](int p, int n, int dmax) {
        const auto s = hs_of_summand_list(decompose_invariants(p, n), dmax);
        for (int d = 0; d <= dmax; ++d) {
            const BigInt got{bruteforce_g1_dim(p, n, d)};
            if (got != s[d]) {
                o.fail(pair_str(n, p) + " degree " + std::to_string(d) + ": oracle " + to_decimal(got) + ", series " +
                       to_decimal(s[d]));
            }
        }
    };
    check(2, 4, 12);
    check(3, 4, 12);
    check(2, 5, 8);
    if (bruteforce_g1_dim(2, 4, 2) != 14) o.fail("dim (S_2)^{G_1} at (p=2, n=4) is not 14");
    return o;
}

Outcome fusion_tableaux()
{
    Outcome o;
    std::uint64_t compared = 0;
    for (int p : {2, 3, 5, 7}) {
        for (int k = 1; k <= 5; ++k) {
            std::vector<int> t(static_cast<std::size_t>(k), 0);
            std::function<void(int)> rec = [&](int i) {
                if (i == k) {
                    const auto fused = oracle::fuse_tuple(p, t);
                    for (int q = 0; q <= p - 2; ++q) {
                        const auto it = fused.find(q);
                        const BigInt want = it == fused.end() ? BigInt{0} : it->second;
                        ++compared;
                        if (tableau_count(p, t, q) != want) {
                            std::ostringstream s;
                            s << "p=" << p << " q=" << q << " tuple";
                            for (int x : t) s << ' ' << x;
                            o.fail(s.str());
                        }
                    }
                    return;
                }
                for (int x = 0; x <= p - 2; ++x) {
                    t[static_cast<std::size_t>(i)] = x;
                    rec(i + 1);
                }
            };
            rec(0);
        }
    }
    o.note(std::to_string(compared) + " multiplicities compared");
    return o;
}

Outcome duality_and_ranks()
{
    Outcome o;
    for (int n = 4; n <= 8; ++n) {
        for (int p : {2, 3, 5, 7}) {
            const auto inv = decompose_invariants(p, n);
            const auto ring = decompose_ring(p, n);
            const auto sheaf = decompose_grassmannian(p, n);
            for (const auto& v : duality_violations(ring)) o.fail(pair_str(n, p) + " duality: " + v);
            if (inv.rank_sum() != ipow(p, 2 * n - 3)) o.fail(pair_str(n, p) + " invariants rank sum");
            if (ring.rank_sum() != ipow(p, 2 * n - 3)) o.fail(pair_str(n, p) + " ring rank sum");
            if (sheaf.rank_sum() != ipow(p, 2 * (n - 2))) o.fail(pair_str(n, p) + " sheaf rank sum");
        }
    }
    return o;
}

Outcome ncr_polynomiality()
{
    Outcome o;
    const int D = 80;
    const int guard = 20;
    for (int n = 5; n <= 8; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const auto h = hom_hilbert_matrix(n, D);
            for (std::size_t u = 0; u < h.size(); ++u) {
                if (h.entries[u][u][0] != 1) o.fail("n=" + std::to_string(n) + " diagonal " + h.labels[u] + " constant term");
            }
            const auto inv = invert_truncated_matrix(h);
            if (!is_identity_product(h.entries, inv, D)) o.fail("n=" + std::to_string(n) + " identity product");
            const auto rep = polynomiality_report(inv, D, guard, h.labels);
            if (!rep.polynomial) o.fail("n=" + std::to_string(n) + " not polynomial: " + rep.tail_entries.front());
            o.note("n=" + std::to_string(n) + " inverse degree " + std::to_string(rep.max_degree) +
                   (rep.integral ? ", integral" : ", non-integral") + " (" + std::to_string(seconds_since(t0)) + " s)");
        } catch (const Error& e) {
            o.fail("n=" + std::to_string(n) + " error[" + e.kind() + "] " + e.what());
        }
    }

    // Constant term of Hom(K{1}, K{1}) at n = 4 as C(4,3) * dim K_1(0)^G - C(4,4) * dim (V x K_1(1))^G.
    HilbertContext ctx(4);
    const BigInt first = binomial(4, 3) * invariant_dim(ctx.K(1, 0));
    const BigInt second = binomial(4, 4) * invariant_dim_of_product(weyl_char(1), ctx.K(1, 1));
    const BigInt entry = hom_hilbert_matrix(4, 4).entries[ncr_index_K(4, 1)][ncr_index_K(4, 1)][0];
    if (first != 16 || second != 15 || entry != 1) {
        o.fail("(K{1},K{1}) constant term: " + to_decimal(first) + " - " + to_decimal(second) + " = " + to_decimal(entry));
    }
    return o;
}

Outcome characters()
{
    Outcome o;
    for (int p : {2, 3, 5, 7}) {
        for (int u = 0; u <= 200; ++u) {
            TiltingMultiset one;
            one.add(u, 1);
            const auto c = tilting_char(p, u);
            if (decompose_tilting_char(p, c) != one) o.fail("round trip p=" + std::to_string(p) + " u=" + std::to_string(u));
            WeightChar sum;
            for (const auto& [v, k] : nabla_mults(p, u)) sum.add_scaled(weyl_char(v), k);
            if (sum != c) o.fail("nabla identity p=" + std::to_string(p) + " u=" + std::to_string(u));
        }
    }
    return o;
}

const std::map<std::string, std::pair<std::string, std::function<Outcome()>>>& criteria()
{
    static const std::map<std::string, std::pair<std::string, std::function<Outcome()>>> table{
        {"AC1", {"sheaf summand counts", summand_counts}},
        {"AC2", {"n=4 tilting case and Kaneda collection", tilting_case_n4}},
        {"AC3", {"range conformance", range_conformance}},
        {"AC4", {"ring-level Hilbert identity to degree 60", hilbert_identity}},
        {"AC5", {"brute-force F_p oracle", bruteforce_oracle}},
        {"AC6", {"fusion and tableau counts agree", fusion_tableaux}},
        {"AC7", {"duality and rank sums", duality_and_ranks}},
        {"AC8", {"NCR polynomiality", ncr_polynomiality}},
        {"AC9", {"tilting characters", characters}},
    };
    return table;
}

bool run_one(const std::string& id)
{
    const auto& [title, fn] = criteria().at(id);
    Outcome o;
    try {
        o = fn();
    } catch (const Error& e) {
        o.fail(std::string("error[") + e.kind() + "] " + e.what());
    }
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << id << ' ' << title << std::endl;
    return o.ok;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string which = argc > 1 ? argv[1] : "all";
    if (which != "all" && !criteria().count(which)) {
        std::cerr << "usage: acceptance [AC1..AC9|all]\n";
        return 2;
    }
    bool ok = true;
    for (const auto& [id, entry] : criteria()) {
        if (which == "all" || which == id) ok = run_one(id) && ok;
    }
    return ok ? 0 : 1;
}
