#pragma once

#include "frobsum/fp_kernel.hpp"
#include "frobsum/hilbert_series.hpp"
#include "frobsum/inventory.hpp"

#include <string>
#include <vector>

namespace frobsum {

enum class OracleMode { character, bruteforce, both };

inline OracleMode parse_oracle_mode(const std::string& s)
{
    if (s == "character") return OracleMode::character;
    if (s == "bruteforce") return OracleMode::bruteforce;
    if (s == "both") return OracleMode::both;
    throw DomainError("unknown oracle '" + s + "' (expected character, bruteforce or both)");
}

struct VerifyOptions {
    OracleMode oracle = OracleMode::both;
    std::uint64_t budget = default_oracle_budget;
    int oracle_max_degree = -1; // cap for the brute-force oracle; -1 means D
};

struct CheckResult {
    std::string name;
    bool ok = true;
    bool skipped = false;
    int failing_degree = -1; // first degree where the identity fails, if any
    std::string detail;
};

struct VerifyReport {
    int n = 0;
    int p = 0;
    int D = 0;
    std::vector<CheckResult> checks;

    bool ok() const
    {
        for (const auto& c : checks) {
            if (!c.ok) return false;
        }
        return true;
    }
};

namespace detail {

inline CheckResult check_ring_series(const SummandList& ring, int D)
{
    CheckResult r{"ring_series", true, false, -1, ""};
    HilbertContext ctx(ring.n);
    const TruncSeries lhs = hs_of_summand_list(ring, D);
    const TruncSeries rhs = hs_R(ctx, D);
    const int bad = first_difference(lhs, rhs);
    if (bad >= 0) {
        r.ok = false;
        r.failing_degree = bad;
        r.detail = "degree " + std::to_string(bad) + ": summands give " + to_decimal(lhs[bad]) + ", R has " +
                   to_decimal(rhs[bad]);
    } else {
        r.detail = "equal to degree " + std::to_string(D);
    }
    return r;
}

inline CheckResult check_bruteforce(const SummandList& inv, int D, const VerifyOptions& opt)
{
    CheckResult r{"bruteforce_g1", true, false, -1, ""};
    const int cap = opt.oracle_max_degree < 0 ? D : std::min(D, opt.oracle_max_degree);
    const TruncSeries series = hs_of_summand_list(inv, D);
    int reached = -1;
    for (int d = 0; d <= cap; ++d) {
        std::uint64_t dim = 0;
        try {
            dim = bruteforce_g1_dim(inv.p, inv.n, d, opt.budget);
        } catch (const BudgetExceeded& e) {
            r.detail = "stopped before degree " + std::to_string(d) + ": " + e.what() + "; ";
            break;
        }
        if (BigInt{dim} != series[d]) {
            r.ok = false;
            r.failing_degree = d;
            r.detail += "degree " + std::to_string(d) + ": oracle " + std::to_string(dim) + ", summands " +
                        to_decimal(series[d]);
            return r;
        }
        reached = d;
    }
    if (reached < 0) {
        r.skipped = true;
        r.detail += "no degree within budget";
    } else {
        r.detail += "equal for degrees 0.." + std::to_string(reached);
    }
    return r;
}

inline CheckResult check_ranks(const SummandList& inv, const SummandList& sheaf)
{
    CheckResult r{"rank_sums", true, false, -1, ""};
    const BigInt a = inv.rank_sum();
    const BigInt b = sheaf.rank_sum();
    r.ok = a == inv.expected_rank() && b == sheaf.expected_rank();
    r.detail = "invariants " + to_decimal(a) + " (expected " + to_decimal(inv.expected_rank()) + "), sheaf " +
               to_decimal(b) + " (expected " + to_decimal(sheaf.expected_rank()) + ")";
    return r;
}

inline CheckResult check_duality_and_ranges(const SummandList& inv, const SummandList& sheaf)
{
    CheckResult r{"duality_ranges", true, false, -1, ""};
    const auto dual = duality_violations(inv);
    const auto a = summand_inventory(inv, false);
    const auto s = summand_inventory(sheaf, false);
    r.ok = dual.empty() && a.conforms() && s.conforms();
    if (!dual.empty()) r.detail += "duality: " + dual.front() + "; ";
    for (const auto* rep : {&a, &s}) {
        if (!rep->out_of_range.empty()) r.detail += "out of range: " + rep->out_of_range.front() + "; ";
        if (!rep->absent.empty()) r.detail += "absent: " + rep->absent.front() + "; ";
    }
    if (r.ok) r.detail = "duality holds, all summands within range, all range elements realized";
    return r;
}

} // namespace detail

/// Certifies the decomposition at (p, n): (a) the ring-level Hilbert series
/// identity to degree D, (b) agreement of the invariants-level series with the
/// brute-force F_p oracle, (c) rank sums, (d) duality and range conformance.
inline VerifyReport verify_identities(int p, int n, int D, const VerifyOptions& opt = {})
{
    Params::make(n, p, D);
    VerifyReport rep{n, p, D, {}};
    const SummandList inv = decompose_invariants(p, n);
    SummandList ring = inv;
    ring.level = Level::ring;
    const SummandList sheaf = sheafify(ring);

    if (opt.oracle != OracleMode::bruteforce) rep.checks.push_back(detail::check_ring_series(ring, D));
    if (opt.oracle != OracleMode::character) rep.checks.push_back(detail::check_bruteforce(inv, D, opt));
    rep.checks.push_back(detail::check_ranks(inv, sheaf));
    rep.checks.push_back(detail::check_duality_and_ranges(inv, sheaf));
    return rep;
}

/// Same checks on an externally supplied ring-level list (used to confirm the
/// certificate notices a perturbed multiplicity).
inline CheckResult verify_ring_series(const SummandList& ring, int D) { return detail::check_ring_series(ring, D); }

} // namespace frobsum
