// tmh - invariants of twisted Milnor hypersurfaces H^I_{n1,n2}(d1,d2).
//
// Subcommands:
//   compute     one hypersurface -> report (json or table)
//   sweep       a parameter grid -> csv or json-lines file, parallel but
//               deterministic
//   verify      closed form vs. series pairing oracle over a grid
//   identities  combinatorial cross-identity self-tests
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 domain error
// (no spin structure / non-integral value), 4 output I/O error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tmh/invariants.hpp"
#include "tmh/report_io.hpp"
#include "tmh/selftest.hpp"
#include "tmh/series.hpp"
#include "tmh/sweep.hpp"

namespace {

constexpr uint64_t kDefaultSeed = 20250810;

std::vector<long long> parse_int_list(const std::string& text, char sep) {
    std::vector<long long> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, sep)) {
        size_t pos = 0;
        long long v = std::stoll(cur, &pos);
        if (pos != cur.size()) throw std::invalid_argument("bad integer '" + cur + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

// "lo:hi" or a single value
void parse_range(const std::string& text, long long& lo, long long& hi) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        lo = hi = std::stoll(text);
        return;
    }
    lo = std::stoll(text.substr(0, colon));
    hi = std::stoll(text.substr(colon + 1));
    if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
}

unsigned default_jobs() {
    if (const char* env = std::getenv("TMH_JOBS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

int cmd_compute(int n1, int n2, const std::string& twist, long long d1, long long d2,
                const std::string& format, bool alpha_only) {
    tmh::TwistSpec spec;
    spec.n1 = n1;
    spec.n2 = n2;
    spec.twists = parse_int_list(twist, ',');
    spec.d1 = d1;
    spec.d2 = d2;
    if (spec.twists.size() != static_cast<size_t>(n2)) {
        std::cerr << "error: expected " << n2 << " twist entries, got " << spec.twists.size()
                  << "\n";
        return 2;
    }
    spec.validate();

    if (alpha_only) {
        tmh::KOClass a;
        try {
            a = tmh::alpha(spec);
        } catch (const tmh::NotSpinError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 3;
        }
        if (format == "table") {
            std::cout << "alpha in KO_" << a.n_mod_8 << " (" << tmh::ko_group_to_string(a.group)
                      << ")";
            if (a.group != tmh::KOGroup::Trivial) std::cout << " value " << a.value;
            std::cout << "\n";
        } else {
            nlohmann::ordered_json j;
            j["n_mod_8"] = a.n_mod_8;
            j["group"] = tmh::ko_group_to_string(a.group);
            if (a.group == tmh::KOGroup::Z)
                j["value"] = a.value.str();
            else if (a.group == tmh::KOGroup::Z2)
                j["value"] = a.value.is_zero() ? 0 : 1;
            else
                j["value"] = nullptr;
            std::cout << j.dump(2) << "\n";
        }
        return 0;
    }

    tmh::InvariantReport rep = tmh::report(spec);
    if (format == "table")
        std::cout << tmh::report_table(rep);
    else
        std::cout << tmh::report_json_pretty(rep) << "\n";
    return 0;
}

struct SweepArgs {
    std::string n1, n2, d1, d2;
    std::string twists;
    int max_nonzero = 2;
    long long twist_bound = 2;
    bool spin_only = false;
    std::string out;
    unsigned jobs = default_jobs();
    std::string format = "csv";
    bool timing = false;
};

int cmd_sweep(const SweepArgs& a) {
    tmh::SweepRange range;
    long long lo, hi;
    parse_range(a.n1, lo, hi);
    range.n1_lo = static_cast<int>(lo);
    range.n1_hi = static_cast<int>(hi);
    parse_range(a.n2, lo, hi);
    range.n2_lo = static_cast<int>(lo);
    range.n2_hi = static_cast<int>(hi);
    parse_range(a.d1, range.d1_lo, range.d1_hi);
    parse_range(a.d2, range.d2_lo, range.d2_hi);
    if (!a.twists.empty()) {
        std::istringstream is(a.twists);
        std::string one;
        while (std::getline(is, one, ';'))
            range.explicit_twists.push_back(parse_int_list(one, ','));
    }
    range.generator = {a.max_nonzero, a.twist_bound};
    range.spin_only = a.spin_only;

    std::vector<tmh::TwistSpec> specs = tmh::enumerate_specs(range);
    std::vector<tmh::OutputRecord> records = tmh::run_sweep(specs, a.jobs);

    const std::string tmp = a.out + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            std::cerr << "error: cannot write " << a.out << "\n";
            return 4;
        }
        if (a.format == "csv") os << tmh::csv_header(a.timing) << "\n";
        for (const auto& rec : records) {
            long long us = a.timing ? rec.elapsed_us : -1;
            if (a.format == "csv")
                os << tmh::report_csv_row(rec.report, us) << "\n";
            else
                os << tmh::report_json_line(rec.report, us) << "\n";
        }
        os.flush();
        if (!os) {
            std::cerr << "error: cannot write " << a.out << "\n";
            std::remove(tmp.c_str());
            return 4;
        }
    }
    if (std::rename(tmp.c_str(), a.out.c_str()) != 0) {
        std::cerr << "error: cannot move output into place at " << a.out << "\n";
        std::remove(tmp.c_str());
        return 4;
    }
    std::cerr << "wrote " << records.size() << " records to " << a.out << "\n";
    return 0;
}

int cmd_verify(int max_n1, int max_n2, long long max_twist, int max_nonzero, long long max_k,
               int samples, uint64_t seed, unsigned jobs, bool corrupt) {
    tmh::OracleScanResult grid =
        tmh::oracle_scan_spin_grid(max_n1, max_n2, max_twist, max_nonzero, max_k, jobs, corrupt);
    tmh::OracleScanResult sampled = tmh::oracle_scan_random_nonspin(
        max_n1, max_n2, max_twist, max_nonzero, 2 * max_k + 8, samples, seed, jobs);

    std::cout << "closed form vs series pairing: checked " << (grid.checked + sampled.checked)
              << " specs (" << grid.checked << " spin grid + " << sampled.checked
              << " sampled non-spin), failures: " << (grid.failed + sampled.failed) << "\n";
    const auto& bad = grid.first_failure ? grid.first_failure : sampled.first_failure;
    if (bad) {
        std::cout << "first counterexample: " << bad->str()
                  << "  f_closed = " << tmh::f_closed(*bad).str()
                  << "  pairing = " << tmh::genus_pairing(*bad, +1).str() << "\n";
    }
    return (grid.failed + sampled.failed) == 0 ? 0 : 1;
}

int cmd_identities(unsigned depth, unsigned mod2_bound) {
    std::vector<tmh::IdentityCheck> checks = tmh::a_number_identity_checks(depth);
    std::vector<tmh::IdentityCheck> parity = tmh::parity_identity_checks(
        mod2_bound, mod2_bound, mod2_bound, static_cast<long>(2 * mod2_bound + 1));
    checks.insert(checks.end(), parity.begin(), parity.end());
    bool all = true;
    for (const auto& c : checks) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (!c.passed) std::cout << "  (first mismatch: " << c.detail << ")";
        std::cout << "\n";
        all = all && c.passed;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of twisted Milnor hypersurfaces"};
    app.require_subcommand(1);
    int exit_code = 0;

    // compute
    auto* compute = app.add_subcommand("compute", "report for one hypersurface");
    int c_n1 = 1, c_n2 = 1;
    std::string c_twist, c_format = "json";
    long long c_d1 = 0, c_d2 = 0;
    bool c_alpha_only = false;
    compute->add_option("--n1", c_n1, "base projective dimension")->required();
    compute->add_option("--n2", c_n2, "fiber projective dimension")->required();
    compute->add_option("--twist", c_twist, "comma-separated twist vector, length n2")->required();
    compute->add_option("--d1", c_d1, "degree on u")->required();
    compute->add_option("--d2", c_d2, "degree on v")->required();
    compute->add_option("--format", c_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    compute->add_flag("--alpha-only", c_alpha_only, "print only the alpha invariant");
    compute->callback([&] {
        exit_code = cmd_compute(c_n1, c_n2, c_twist, c_d1, c_d2, c_format, c_alpha_only);
    });

    // sweep
    auto* sweep = app.add_subcommand("sweep", "evaluate a parameter grid into a file");
    SweepArgs s;
    sweep->add_option("--n1", s.n1, "n1 range, lo:hi or single")->required();
    sweep->add_option("--n2", s.n2, "n2 range, lo:hi or single")->required();
    sweep->add_option("--d1", s.d1, "d1 range, lo:hi or single")->required();
    sweep->add_option("--d2", s.d2, "d2 range, lo:hi or single")->required();
    sweep->add_option("--twists", s.twists,
                      "explicit twist vectors, e.g. '2,0,0;1,1,0' (default: generated)");
    sweep->add_option("--max-nonzero", s.max_nonzero, "generator: max nonzero entries");
    sweep->add_option("--twist-bound", s.twist_bound, "generator: |i_j| bound");
    sweep->add_flag("--spin-only", s.spin_only, "keep only spin hypersurfaces");
    sweep->add_option("--out", s.out, "output path (written atomically)")->required();
    sweep->add_option("--jobs", s.jobs, "worker threads (default: TMH_JOBS or 1)");
    sweep->add_option("--format", s.format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    sweep->add_flag("--timing", s.timing,
                    "append per-spec timing (breaks byte-for-byte reproducibility)");
    sweep->callback([&] { exit_code = cmd_sweep(s); });

    // verify
    auto* verify = app.add_subcommand("verify", "closed form against the series pairing oracle");
    int v_n1 = 3, v_n2 = 4, v_nonzero = 2, v_samples = 200;
    long long v_twist = 2, v_k = 3;
    uint64_t v_seed = kDefaultSeed;
    unsigned v_jobs = default_jobs();
    bool v_corrupt = false;
    verify->add_option("--max-n1", v_n1, "n1 bound");
    verify->add_option("--max-n2", v_n2, "n2 bound");
    verify->add_option("--max-twist", v_twist, "twist entry bound");
    verify->add_option("--max-nonzero", v_nonzero, "max nonzero twist entries");
    verify->add_option("--max-k", v_k, "|k1|,|k2| bound for the spin grid");
    verify->add_option("--samples", v_samples, "random non-spin specs to add");
    verify->add_option("--seed", v_seed, "sampling seed");
    verify->add_option("--jobs", v_jobs, "worker threads (default: TMH_JOBS or 1)");
    verify->add_flag("--self-test-corrupt", v_corrupt)->group("");  // harness testing aid
    verify->callback([&] {
        exit_code =
            cmd_verify(v_n1, v_n2, v_twist, v_nonzero, v_k, v_samples, v_seed, v_jobs, v_corrupt);
    });

    // identities
    auto* identities = app.add_subcommand("identities", "combinatorial identity self-tests");
    unsigned i_depth = 14, i_bound = 200;
    identities->add_option("--depth", i_depth, "triangle depth for the exact identities");
    identities->add_option("--mod2-bound", i_bound, "bound for the parity identities");
    identities->callback([&] { exit_code = cmd_identities(i_depth, i_bound); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const tmh::NotSpinError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tmh::IntegralityViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
