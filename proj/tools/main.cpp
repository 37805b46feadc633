// frobpow — prime powers in two-generator numerical semigroups.
//
// Subcommands:
//   count    one (c, d, k) report as CSV or JSON
//   table    sweep reports over ranges of pairs, CSV/JSON, deterministic
//   verify   run the library property suites, exit 0 iff all pass
//   arcs     arc partition of the unit window + optional probes, JSON
//
// All failures print one line "error:<kind>: <message>" to stderr and
// exit nonzero (2 for input/capacity errors, 1 for verification failure).

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobpow/arcs.hpp"
#include "frobpow/arith.hpp"
#include "frobpow/counts.hpp"
#include "frobpow/errors.hpp"
#include "frobpow/expsum.hpp"
#include "frobpow/report_io.hpp"
#include "frobpow/semigroup.hpp"
#include "frobpow/sieve_cache.hpp"
#include "frobpow/verify.hpp"

namespace {

using namespace frobpow;
using nlohmann::json;

// largest table we materialize before switching to the streaming path
constexpr uint64_t table_cap = uint64_t(1) << 25;

// Build (or fetch from FP_SIEVE_CACHE_DIR) tables covering `limit`.
SieveTables obtain_tables(uint64_t limit) {
    limit = std::max<uint64_t>(limit, 2);
    const char* dir = std::getenv(sieve_cache_env);
    if (dir && *dir) {
        if (auto hit = find_sieve_cache(dir, limit)) return load_sieve_cache(*hit);
        SieveTables tables = build_sieve(limit);
        save_sieve_cache(dir, tables);
        return tables;
    }
    return build_sieve(limit);
}

CountReport make_report(int64_t c, int64_t d, int k) {
    Semigroup sg(c, d);
    CountQuery q(sg, k);
    if (q.root() <= table_cap) {
        SieveTables tables = obtain_tables(q.root());
        return count_report(q, tables);
    }
    return count_report_streamed(sg, k);
}

// ---------------------------------------------------------------- count

struct CountArgs {
    int64_t c = 0, d = 0;
    int k = 1;
    std::string format = "csv";
};

int cmd_count(const CountArgs& args) {
    CountReport r = make_report(args.c, args.d, args.k);
    if (args.format == "json")
        std::cout << report_json(r).dump(2) << "\n";
    else
        std::cout << csv_header << "\n" << csv_row(r) << "\n";
    return 0;
}

// ---------------------------------------------------------------- table

struct TableArgs {
    int64_t c_min = 0, c_max = 0, d_min = 0, d_max = 0;
    std::vector<int> k_list{1};
    std::string pairs = "all";     // "all" or "random:N"
    uint64_t seed = 0;
    std::string format = "csv";
    std::string out;
    unsigned threads = 0;
};

struct RowSpec {
    int64_t c, d;
    int k;
    bool operator<(const RowSpec& o) const {
        return std::tie(c, d, k) < std::tie(o.c, o.d, o.k);
    }
};

std::vector<RowSpec> enumerate_rows(const TableArgs& args) {
    if (args.c_min < 2 || args.c_min > args.c_max || args.d_min > args.d_max)
        throw domain_error("empty or invalid pair ranges");
    if (args.k_list.empty()) throw domain_error("k list must be nonempty");
    for (int k : args.k_list)
        if (k < 1) throw domain_error("exponents must be >= 1");
    std::vector<int> ks = args.k_list;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    std::set<std::pair<int64_t, int64_t>> pairs;
    if (args.pairs == "all") {
        for (int64_t c = args.c_min; c <= args.c_max; ++c)
            for (int64_t d = std::max(args.d_min, c + 1); d <= args.d_max; ++d)
                if (std::gcd(c, d) == 1) pairs.emplace(c, d);
    } else if (args.pairs.rfind("random:", 0) == 0) {
        int64_t want = std::strtoll(args.pairs.c_str() + 7, nullptr, 10);
        if (want < 1) throw domain_error("random pair count must be >= 1");
        splitmix64 rng(args.seed);
        int64_t attempts = 0;
        const int64_t max_attempts = want * 10'000;
        while (static_cast<int64_t>(pairs.size()) < want) {
            if (++attempts > max_attempts)
                throw domain_error("cannot draw enough coprime pairs from the ranges");
            auto c = static_cast<int64_t>(
                rng.range(static_cast<uint64_t>(args.c_min), static_cast<uint64_t>(args.c_max)));
            auto d = static_cast<int64_t>(
                rng.range(static_cast<uint64_t>(args.d_min), static_cast<uint64_t>(args.d_max)));
            if (c <= 1 || d <= c || std::gcd(c, d) != 1) continue;
            pairs.emplace(c, d);
        }
    } else {
        throw domain_error("pair mode must be 'all' or 'random:N'");
    }
    if (pairs.empty()) throw domain_error("pair ranges contain no valid coprime pair");

    std::vector<RowSpec> rows;
    for (const auto& [c, d] : pairs)
        for (int k : ks) rows.push_back(RowSpec{c, d, k});
    std::sort(rows.begin(), rows.end());
    return rows;
}

int cmd_table(const TableArgs& args) {
    const auto rows = enumerate_rows(args);

    // one shared table build for every row the cap admits
    uint64_t shared_limit = 0;
    for (const auto& row : rows) {
        uint64_t root = CountQuery(Semigroup(row.c, row.d), row.k).root();
        if (root <= table_cap) shared_limit = std::max(shared_limit, root);
    }
    std::optional<SieveTables> shared;
    if (shared_limit >= 2) shared.emplace(obtain_tables(shared_limit));

    std::vector<CountReport> reports(rows.size());
    std::atomic<size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (;;) {
                size_t i = cursor.fetch_add(1);
                if (i >= rows.size()) return;
                Semigroup sg(rows[i].c, rows[i].d);
                CountQuery q(sg, rows[i].k);
                reports[i] = shared && q.root() <= shared->limit()
                                 ? count_report(q, *shared)
                                 : count_report_streamed(sg, rows[i].k);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            cursor.store(rows.size());   // stop the other workers
        }
    };
    unsigned nthreads = args.threads ? args.threads : std::thread::hardware_concurrency();
    nthreads = std::max(1u, std::min<unsigned>(nthreads, rows.size()));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!args.out.empty()) {
        file.open(args.out, std::ios::trunc);
        if (!file) throw io_error("cannot open output path " + args.out);
        os = &file;
    }

    const bool random_mode = args.pairs.rfind("random:", 0) == 0;
    if (args.format == "json") {
        json doc;
        doc["config"] = {{"c_min", args.c_min}, {"c_max", args.c_max},
                         {"d_min", args.d_min}, {"d_max", args.d_max},
                         {"k", args.k_list},    {"pairs", args.pairs},
                         {"seed", args.seed}};
        doc["rows"] = json::array();
        for (const auto& r : reports) doc["rows"].push_back(report_json(r));
        *os << doc.dump(2) << "\n";
    } else {
        if (random_mode)
            *os << "# pairs=" << args.pairs << " seed=" << args.seed << "\n";
        *os << csv_header << "\n";
        for (const auto& r : reports) *os << csv_row(r) << "\n";
    }
    if (!args.out.empty() && !file) throw io_error("short write to " + args.out);
    return 0;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
    std::string level = "quick";
    uint64_t seed = 0;
    std::string inject;
};

int cmd_verify(const VerifyArgs& args) {
    if (args.level != "quick" && args.level != "full")
        throw domain_error("level must be quick or full");
    VerifyOptions opt;
    opt.full = args.level == "full";
    opt.seed = args.seed;
    if (!args.inject.empty()) {
        if (args.inject != "residue-flip")
            throw domain_error("unknown injection '" + args.inject + "'");
        opt.mutate_residue = true;
    }

    auto results = run_verification(opt);
    size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    char buf[32];
    for (const auto& r : results) {
        std::snprintf(buf, sizeof buf, "%7.2fs", r.seconds);
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
                  << std::string(width - r.name.size(), ' ') << buf;
        if (!r.pass) std::cout << "  witness=(" << r.witness << ")";
        std::cout << "\n";
    }
    bool ok = all_passed(results);
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return ok ? 0 : 1;
}

// ----------------------------------------------------------------- arcs

struct ArcsArgs {
    int64_t c = 0, d = 0;
    int k = 1;
    int64_t q_max = 1;
    int64_t probes = 0;
    bool quadrature = false;
    int64_t step_divisor = 8;
    std::string out;
};

int cmd_arcs(const ArcsArgs& args) {
    Semigroup sg(args.c, args.d);
    CountQuery q(sg, args.k);
    ArcPartition part = build_arcs(args.q_max, sg.frobenius());

    json doc;
    doc["c"] = sg.c();
    doc["d"] = sg.d();
    doc["k"] = args.k;
    doc["Q"] = part.q_max;
    doc["g"] = part.g;
    doc["disjoint_certified"] = part.disjoint_certified;
    if (!part.disjoint_certified)
        doc["warning"] = "Q >= (g/2)^(1/3): arcs may overlap, classification unverified";
    doc["arcs"] = json::array();
    for (const Arc& arc : part.arcs)
        doc["arcs"].push_back({{"q", arc.q},
                               {"a", arc.a},
                               {"center", arc.center.str()},
                               {"half_width", arc.half_width.str()}});

    if (args.probes > 0 || args.quadrature) {
        if (q.root() > 10'000'000)
            throw capacity_error("probes need g^(1/k) <= 10^7");
        SieveTables tables = obtain_tables(q.root());
        TrigPoly f = build_f(q, tables);
        if (args.probes > 0) {
            MinorProbe probe = minor_sup_probe(f, part, args.probes);
            doc["sup_probe"] = {{"samples", probe.samples_total},
                                {"samples_minor", probe.samples_minor},
                                {"sup_abs", probe.sup_abs},
                                {"ratio", probe.ratio_to_f0}};
        }
        if (args.quadrature) {
            double major = major_integral_quadrature(f, sg, part, args.step_divisor);
            double window = window_integral_quadrature(f, sg, args.step_divisor);
            doc["quadrature"] = {{"step_divisor", args.step_divisor},
                                 {"major", major},
                                 {"minor", window - major},
                                 {"window", window},
                                 {"psi_exact", trig_product_integral(f, sg)}};
        }
    }

    if (args.out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream file(args.out, std::ios::trunc);
        if (!file) throw io_error("cannot open output path " + args.out);
        file << doc.dump(2) << "\n";
        if (!file) throw io_error("short write to " + args.out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime powers in two-generator numerical semigroups"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "report for one (c, d, k)");
    count->add_option("--c", count_args.c, "generator c")->required();
    count->add_option("--d", count_args.d, "generator d")->required();
    count->add_option("--k", count_args.k, "power exponent");
    count->add_option("--format", count_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "sweep reports over pair ranges");
    table->add_option("--c-min", table_args.c_min)->required();
    table->add_option("--c-max", table_args.c_max)->required();
    table->add_option("--d-min", table_args.d_min)->required();
    table->add_option("--d-max", table_args.d_max)->required();
    table->add_option("--k", table_args.k_list, "exponent list");
    table->add_option("--pairs", table_args.pairs, "all or random:N");
    table->add_option("--seed", table_args.seed, "PRNG seed (splitmix64)");
    table->add_option("--format", table_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", table_args.out, "output path (default stdout)");
    table->add_option("--threads", table_args.threads, "worker threads");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--level", verify_args.level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--seed", verify_args.seed, "PRNG seed");
    verify->add_option("--inject", verify_args.inject, "fault injection (tests the tests)")
        ->group("");   // hidden

    ArcsArgs arcs_args;
    auto* arcs = app.add_subcommand("arcs", "arc partition and probes");
    arcs->add_option("--c", arcs_args.c)->required();
    arcs->add_option("--d", arcs_args.d)->required();
    arcs->add_option("--k", arcs_args.k);
    arcs->add_option("--Q", arcs_args.q_max, "largest denominator")->required();
    arcs->add_option("--probes", arcs_args.probes, "minor-arc sample count");
    arcs->add_flag("--quadrature", arcs_args.quadrature, "trapezoid decomposition");
    arcs->add_option("--step-divisor", arcs_args.step_divisor, "grid pitch 1/(sd*g)");
    arcs->add_option("--out", arcs_args.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error:usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(count)) return cmd_count(count_args);
        if (app.got_subcommand(table)) return cmd_table(table_args);
        if (app.got_subcommand(verify)) return cmd_verify(verify_args);
        if (app.got_subcommand(arcs)) return cmd_arcs(arcs_args);
        std::cerr << "error:usage: no subcommand\n";
        return 2;
    } catch (const frobpow::error& e) {
        std::cerr << "error:" << e.kind() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error:internal: " << e.what() << "\n";
        return 2;
    }
}
