// Command-line front end: characters, fusion data, decompositions, certificates
// and the Hom-matrix polynomiality test for Gr(2, n) in characteristic p.

#include "frobsum/frobsum.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using namespace frobsum;

enum class Format { text, json, csv };

struct RunConfig {
    Format format = Format::text;
    std::string output;
    bool quiet = false;
};

// Exit status for a completed run whose checks failed.
constexpr int kCheckFailed = 1;

class Output {
public:
    explicit Output(const RunConfig& cfg)
    {
        if (!cfg.output.empty()) {
            file_.open(cfg.output);
            if (!file_) throw DomainError("cannot open output file '" + cfg.output + "'");
        }
    }

    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void log(const RunConfig& cfg, const std::string& msg)
{
    if (!cfg.quiet) std::cerr << msg << '\n';
}

json char_to_json(const WeightChar& c)
{
    json j = json::object();
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) j[std::to_string(it->first)] = to_decimal(it->second);
    return j;
}

json series_to_json(const TruncSeries& s)
{
    json arr = json::array();
    for (const auto& c : s.coeffs()) arr.push_back(to_decimal(c));
    return arr;
}

std::string poly_text(const TruncSeries& s)
{
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= s.degree(); ++d) {
        if (s[d] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << s[d];
        if (d > 0) os << "*t^" << d;
    }
    if (first) os << '0';
    return os.str();
}

// --- char ---------------------------------------------------------------

int run_char(const RunConfig& cfg, int p, int u_from, int u_to)
{
    require_prime(p);
    if (u_to < u_from) u_to = u_from;
    Output out(cfg);
    auto& os = out.os();
    json arr = json::array();
    if (cfg.format == Format::csv) os << "p,u,digits,dimension,nabla\n";
    for (int u = u_from; u <= u_to; ++u) {
        const auto ds = tilting_digits(p, u);
        const auto ch = tilting_char(p, u);
        const auto nab = nabla_mults(p, u);
        std::string digits;
        for (std::size_t i = 0; i < ds.size(); ++i) digits += (i ? " " : "") + std::to_string(ds[i]);
        std::string nabla;
        for (auto it = nab.rbegin(); it != nab.rend(); ++it) nabla += (nabla.empty() ? "" : " ") + std::to_string(it->first);
        switch (cfg.format) {
        case Format::json: {
            json nj = json::object();
            for (auto it = nab.rbegin(); it != nab.rend(); ++it) nj[std::to_string(it->first)] = to_decimal(it->second);
            arr.push_back({{"p", p}, {"u", u}, {"digits", ds}, {"dimension", to_decimal(ch.dimension())},
                           {"character", char_to_json(ch)}, {"nabla", nj}});
            break;
        }
        case Format::csv: os << p << ',' << u << ',' << digits << ',' << ch.dimension() << ',' << nabla << '\n'; break;
        case Format::text:
            os << "T(" << u << ") p=" << p << "  digits (" << digits << ")  dim " << ch.dimension() << '\n'
               << "  nabla: " << nabla << '\n'
               << "  char: " << ch << '\n';
            break;
        }
    }
    if (cfg.format == Format::json) os << (u_from == u_to ? arr.front() : arr).dump(2) << '\n';
    return 0;
}

// --- fusion -------------------------------------------------------------

int run_fusion(const RunConfig& cfg, int p, int n)
{
    const APolynomials a = a_polynomials(p, n);
    Output out(cfg);
    auto& os = out.os();
    switch (cfg.format) {
    case Format::json: {
        json table = json::array();
        for (int q1 = 0; q1 <= p - 2; ++q1) {
            for (int q2 = 0; q2 <= p - 2; ++q2) {
                json prod = json::array();
                for (const auto& [key, k] : fusion_product(p, q1, q2).entries) prod.push_back(key.first);
                table.push_back({{"a", q1}, {"b", q2}, {"product", prod}});
            }
        }
        json j{{"p", p}, {"n", n}, {"a0", series_to_json(a.a0)}, {"a_p2", series_to_json(a.a_p2)}, {"fusion", table}};
        os << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "row,d,mult\n";
        for (int d = 0; d <= a.a0.degree(); ++d) {
            if (a.a0[d] != 0) os << "a0," << d << ',' << a.a0[d] << '\n';
        }
        for (int d = 0; d <= a.a_p2.degree(); ++d) {
            if (a.a_p2[d] != 0) os << "a_p2," << d << ',' << a.a_p2[d] << '\n';
        }
        break;
    case Format::text:
        os << "p=" << p << " n=" << n << '\n';
        os << "a0(t)     = " << poly_text(a.a0) << '\n';
        os << "a_p-2(t)  = " << poly_text(a.a_p2) << '\n';
        os << "fusion products L(a)*L(b):\n";
        for (int q1 = 0; q1 <= p - 2; ++q1) {
            for (int q2 = q1; q2 <= p - 2; ++q2) {
                os << "  L(" << q1 << ")*L(" << q2 << ") =";
                bool first = true;
                for (const auto& [key, k] : fusion_product(p, q1, q2).entries) {
                    os << (first ? " " : " + ") << "L(" << key.first << ')';
                    first = false;
                }
                if (first) os << " 0";
                os << '\n';
            }
        }
        break;
    }
    return 0;
}

// --- decompose ----------------------------------------------------------

int run_decompose(const RunConfig& cfg, int n, int p, Level level)
{
    Params::make(n, p, 0);
    const SummandList list = decompose(p, n, level);
    const InventoryReport inv = summand_inventory(list, false);
    Output out(cfg);
    auto& os = out.os();
    switch (cfg.format) {
    case Format::json: os << to_json(list).dump(2) << '\n'; break;
    case Format::csv: write_csv(os, list); break;
    case Format::text:
        write_text(os, list);
        if (!inv.out_of_range.empty()) os << "outside admissible range: " << inv.out_of_range.size() << '\n';
        if (!inv.absent.empty()) os << "admissible but absent: " << inv.absent.size() << '\n';
        break;
    }
    if (!inv.out_of_range.empty()) {
        throw RangeViolation("summand " + inv.out_of_range.front() + " lies outside its admissible range");
    }
    return 0;
}

// --- verify -------------------------------------------------------------

int run_verify(const RunConfig& cfg, int n, int p, int D, const VerifyOptions& opt)
{
    log(cfg, "verifying n=" + std::to_string(n) + " p=" + std::to_string(p) + " to degree " + std::to_string(D));
    const VerifyReport rep = verify_identities(p, n, D, opt);
    Output out(cfg);
    auto& os = out.os();
    switch (cfg.format) {
    case Format::json: {
        json checks = json::array();
        for (const auto& c : rep.checks) {
            checks.push_back({{"name", c.name}, {"ok", c.ok}, {"skipped", c.skipped},
                              {"failing_degree", c.failing_degree}, {"detail", c.detail}});
        }
        os << json{{"n", n}, {"p", p}, {"degree", D}, {"ok", rep.ok()}, {"checks", checks}}.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "check,ok,failing_degree,detail\n";
        for (const auto& c : rep.checks) {
            os << c.name << ',' << (c.ok ? "true" : "false") << ',' << c.failing_degree << ",\"" << c.detail << "\"\n";
        }
        break;
    case Format::text:
        for (const auto& c : rep.checks) {
            os << (c.ok ? (c.skipped ? "SKIP " : "OK   ") : "FAIL ") << c.name << ": " << c.detail << '\n';
        }
        os << (rep.ok() ? "all checks passed" : "some checks failed") << '\n';
        break;
    }
    return rep.ok() ? 0 : kCheckFailed;
}

// --- ncr ----------------------------------------------------------------

int run_ncr(const RunConfig& cfg, int n, int D, int guard, bool matrices)
{
    if (guard < 0) guard = D / 4;
    log(cfg, "building Hom matrix n=" + std::to_string(n) + " to degree " + std::to_string(D));
    const HomMatrix H = hom_hilbert_matrix(n, D);
    const auto Hinv = invert_truncated_matrix(H);
    const bool product_ok = is_identity_product(H.entries, Hinv, D);
    const auto rep = polynomiality_report(Hinv, D, guard, H.labels);
    bool diag_ok = true;
    for (std::size_t u = 0; u < H.size(); ++u) diag_ok = diag_ok && H.entries[u][u][0] == 1;
    const bool ok = rep.polynomial && rep.integral && product_ok && diag_ok;

    Output out(cfg);
    auto& os = out.os();
    switch (cfg.format) {
    case Format::json: {
        json j{{"n", n},
               {"trunc", D},
               {"guard", guard},
               {"modules", H.labels},
               {"polynomial", rep.polynomial},
               {"integral", rep.integral},
               {"identity_product", product_ok},
               {"unit_diagonal", diag_ok},
               {"max_degree", rep.max_degree},
               {"entry_degree", rep.entry_degree}};
        if (matrices) {
            json hm = json::array();
            json im = json::array();
            for (std::size_t u = 0; u < H.size(); ++u) {
                json hr = json::array();
                json ir = json::array();
                for (std::size_t v = 0; v < H.size(); ++v) {
                    hr.push_back(series_to_json(H.entries[u][v]));
                    json coeffs = json::array();
                    const int top = std::max(Hinv[u][v].max_nonzero_degree(), 0);
                    for (int d = 0; d <= top; ++d) coeffs.push_back(to_decimal(Hinv[u][v][d]));
                    ir.push_back(coeffs);
                }
                hm.push_back(hr);
                im.push_back(ir);
            }
            j["hom_matrix"] = hm;
            j["inverse"] = im;
        }
        os << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "row,col,max_degree\n";
        for (std::size_t u = 0; u < H.size(); ++u) {
            for (std::size_t v = 0; v < H.size(); ++v) {
                os << H.labels[u] << ',' << H.labels[v] << ',' << rep.entry_degree[u][v] << '\n';
            }
        }
        break;
    case Format::text:
        os << "modules:";
        for (const auto& l : H.labels) os << ' ' << l;
        os << "\nmax degree of inverse entries:\n";
        for (std::size_t u = 0; u < H.size(); ++u) {
            os << "  ";
            for (std::size_t v = 0; v < H.size(); ++v) os << std::setw(4) << rep.entry_degree[u][v];
            os << '\n';
        }
        os << "polynomial (zero tail of length " << guard << " below t^" << D + 1
           << "): " << (rep.polynomial ? "yes" : "no") << '\n'
           << "integral: " << (rep.integral ? "yes" : "no") << '\n'
           << "H * H^-1 = I: " << (product_ok ? "yes" : "no") << '\n'
           << "unit diagonal constant terms: " << (diag_ok ? "yes" : "no") << '\n'
           << "max degree: " << rep.max_degree << '\n';
        break;
    }
    return ok ? 0 : kCheckFailed;
}

// --- sweep --------------------------------------------------------------

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(std::stoi(item));
            } else {
                const int a = std::stoi(item.substr(0, dots));
                const int b = std::stoi(item.substr(dots + 2));
                for (int v = a; v <= b; ++v) out.push_back(v);
            }
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("expected a list like 4..8 or 2,3 but got '" + s + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("empty list '" + s + "'");
    return out;
}

unsigned thread_cap()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FROBSUM_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) n = static_cast<unsigned>(v);
    }
    return n;
}

struct SweepCell {
    int n = 0;
    int p = 0;
    std::size_t distinct = 0;
    BigInt rank;
    BigInt expected;
    std::size_t out_of_range = 0;
    std::size_t absent = 0;
    std::optional<std::size_t> reference;
    std::string error;
};

int run_sweep(const RunConfig& cfg, const std::vector<int>& ns, const std::vector<int>& ps, Level level)
{
    std::vector<std::pair<int, int>> grid;
    for (int n : ns) {
        for (int p : ps) grid.emplace_back(n, p);
    }
    for (const auto& [n, p] : grid) Params::make(n, p, 0);

    std::vector<std::optional<SweepCell>> done(grid.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            SweepCell cell;
            cell.n = grid[i].first;
            cell.p = grid[i].second;
            try {
                const SummandList list = decompose(cell.p, cell.n, level);
                const InventoryReport inv = summand_inventory(list, false);
                cell.distinct = list.distinct_count();
                cell.rank = list.rank_sum();
                cell.expected = list.expected_rank();
                cell.out_of_range = inv.out_of_range.size();
                cell.absent = inv.absent.size();
                if (level == Level::sheaf) cell.reference = reference_sheaf_count(cell.p, cell.n);
            } catch (const Error& e) {
                cell.error = e.kind() + ": " + e.what();
            }
            {
                std::lock_guard lock(mu);
                done[i] = std::move(cell);
            }
            cv.notify_all();
        }
    };

    const unsigned nthreads = std::min<unsigned>(thread_cap(), static_cast<unsigned>(grid.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);

    Output out(cfg);
    auto& os = out.os();
    json rows = json::array();
    bool all_ok = true;
    if (cfg.format == Format::csv) os << "n,p,level,distinct,reference,rank_sum,rank_ok,out_of_range,absent\n";
    if (cfg.format == Format::text) {
        os << std::left << std::setw(4) << "n" << std::setw(4) << "p" << std::setw(10) << "distinct" << std::setw(11)
           << "reference" << std::setw(9) << "rank_ok" << std::setw(14) << "out_of_range" << std::setw(8) << "absent"
           << "note\n";
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        SweepCell cell;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return done[i].has_value(); });
            cell = *done[i];
        }
        const bool rank_ok = cell.error.empty() && cell.rank == cell.expected;
        const std::string ref = cell.reference ? std::to_string(*cell.reference) : "-";
        const bool differs = cell.reference && *cell.reference != cell.distinct;
        all_ok = all_ok && rank_ok && cell.out_of_range == 0 && cell.absent == 0;
        switch (cfg.format) {
        case Format::json:
            if (cell.error.empty()) {
                rows.push_back({{"n", cell.n}, {"p", cell.p}, {"level", to_string(level)}, {"distinct", cell.distinct},
                                {"reference", cell.reference ? json(*cell.reference) : json(nullptr)},
                                {"rank_sum", to_decimal(cell.rank)}, {"rank_ok", rank_ok},
                                {"out_of_range", cell.out_of_range}, {"absent", cell.absent}});
            } else {
                rows.push_back({{"n", cell.n}, {"p", cell.p}, {"error", cell.error}});
            }
            break;
        case Format::csv:
            os << cell.n << ',' << cell.p << ',' << to_string(level) << ',' << cell.distinct << ',' << ref << ','
               << cell.rank << ','
               << (rank_ok ? "true" : "false") << ',' << cell.out_of_range << ',' << cell.absent << std::endl;
            break;
        case Format::text:
            if (!cell.error.empty()) {
                os << std::setw(4) << cell.n << std::setw(4) << cell.p << "error " << cell.error << std::endl;
            } else {
                os << std::setw(4) << cell.n << std::setw(4) << cell.p << std::setw(10) << cell.distinct << std::setw(11)
                   << ref << std::setw(9) << (rank_ok ? "yes" : "no") << std::setw(14) << cell.out_of_range
                   << std::setw(8) << cell.absent << (differs ? "differs from reference" : "") << std::endl;
            }
            break;
        }
    }
    if (cfg.format == Format::json) os << rows.dump(2) << '\n';
    return all_ok ? 0 : kCheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Frobenius summands of Gr(2,n) in characteristic p"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", cfg.output, "Write results to this file instead of standard output");
    app.add_flag("--quiet", cfg.quiet, "Suppress progress messages");

    int n = 4;
    int p = 2;
    int D = -1;

    auto* c_char = app.add_subcommand("char", "Tilting characters, digits and nabla multiplicities");
    int u = 0;
    int u_to = -1;
    c_char->add_option("--p", p, "Characteristic")->required();
    c_char->add_option("--u", u, "Highest weight")->required()->check(CLI::NonNegativeNumber);
    c_char->add_option("--to", u_to, "Print every weight from --u up to this one");

    auto* c_fusion = app.add_subcommand("fusion", "Fusion products and the a-polynomials");
    c_fusion->add_option("--p", p, "Characteristic")->required();
    c_fusion->add_option("--n", n, "Fusion power")->required()->check(CLI::PositiveNumber);

    auto* c_dec = app.add_subcommand("decompose", "Frobenius-summand decomposition");
    std::string level = "sheaf";
    c_dec->add_option("--n", n, "dim F")->required();
    c_dec->add_option("--p", p, "Characteristic")->required();
    c_dec->add_option("--level", level, "invariants, ring or sheaf")
        ->check(CLI::IsMember({"invariants", "ring", "sheaf"}));

    auto* c_ver = app.add_subcommand("verify", "Certify a decomposition by independent computations");
    std::string oracle = "both";
    VerifyOptions vopt;
    c_ver->add_option("--n", n, "dim F")->required();
    c_ver->add_option("--p", p, "Characteristic")->required();
    c_ver->add_option("--degree", D, "Truncation degree (default max(4p(n-1), 40))");
    c_ver->add_option("--oracle", oracle, "character, bruteforce or both")
        ->check(CLI::IsMember({"character", "bruteforce", "both"}));
    c_ver->add_option("--budget", vopt.budget, "Memory budget of the brute-force oracle in bytes");
    c_ver->add_option("--oracle-degree", vopt.oracle_max_degree, "Highest degree given to the brute-force oracle");

    auto* c_ncr = app.add_subcommand("ncr", "Polynomiality of the inverse Hom-Hilbert matrix");
    int guard = -1;
    bool matrices = false;
    c_ncr->add_option("--n", n, "dim F")->required();
    c_ncr->add_option("--trunc", D, "Truncation degree")->default_val(80);
    c_ncr->add_option("--guard", guard, "Length of the zero tail required (default trunc/4)");
    c_ncr->add_flag("--matrices", matrices, "Include the full matrices in JSON output");

    auto* c_sweep = app.add_subcommand("sweep", "Summary table over ranges of n and p");
    std::string ns = "4..8";
    std::string ps = "2,3";
    std::string sweep_level = "sheaf";
    c_sweep->add_option("--n", ns, "Values of n, e.g. 4..8 or 4,6");
    c_sweep->add_option("--p", ps, "Values of p, e.g. 2,3");
    c_sweep->add_option("--level", sweep_level, "invariants, ring or sheaf")
        ->check(CLI::IsMember({"invariants", "ring", "sheaf"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

    try {
        if (*c_char) return run_char(cfg, p, u, u_to);
        if (*c_fusion) return run_fusion(cfg, p, n);
        if (*c_dec) return run_decompose(cfg, n, p, parse_level(level));
        if (*c_ver) {
            vopt.oracle = parse_oracle_mode(oracle);
            return run_verify(cfg, n, p, D < 0 ? default_truncation(n, p) : D, vopt);
        }
        if (*c_ncr) return run_ncr(cfg, n, D, guard, matrices);
        if (*c_sweep) return run_sweep(cfg, parse_int_list(ns), parse_int_list(ps), parse_level(sweep_level));
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error[" << e.kind() << "]: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
