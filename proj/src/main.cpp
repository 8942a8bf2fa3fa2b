#include "CLI11.hpp"
#include "json.hpp"

#include "fracpow/certify.hpp"
#include "fracpow/errors.hpp"
#include "fracpow/pade.hpp"
#include "fracpow/primes.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using nlohmann::json;
using namespace fracpow;

json ratio_json(const Ratio& r) {
    return json{{"num", r.num().to_decimal()}, {"den", r.den().to_decimal()}};
}

json verdict_json(const Verdict& v) {
    json j{{"passed", v.passed}, {"detail", v.detail}};
    if (v.witness) j["witness"] = *v.witness;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct DirectArgs {
    std::uint64_t from = 0, to = 0;
    unsigned workers = 1;
    std::uint64_t rows = 0;
    std::size_t digits = 40;
};

int run_direct(const DirectArgs& a) {
    Verdict v = check_range(a.from, a.to, a.workers);
    json j{{"from", a.from}, {"to", a.to}, {"workers", a.workers}};
    j["result"] = verdict_json(v);
    if (a.rows > 0) {
        json rows = json::array();
        const std::uint64_t last = std::min(a.to, a.from + a.rows - 1);
        for (std::uint64_t k = a.from; k <= last; ++k) {
            DistanceResult d = power_distance(k);
            rows.push_back(json{
                {"k", k},
                {"side", d.side == Side::above ? "above" : "below"},
                {"distance", d.eps.abs().to_decimal(a.digits)},
                {"residue", d.residue_r.to_decimal()}});
        }
        j["rows"] = std::move(rows);
    }
    emit(j);
    return v.passed ? 0 : 1;
}

struct DescentArgs {
    std::uint64_t start = 17545718, k_min = 5;
    std::string format = "json";
    std::string cache;
    std::uint64_t mem_cap = 4ull << 30;
    bool no_verify_blocks = false, no_fingerprints = false;
};

int run_descent(const DescentArgs& a) {
    PowerCache cache(a.cache);
    DescentOptions opts;
    opts.mem_cap_bytes = a.mem_cap;
    opts.verify_blocks = !a.no_verify_blocks;
    opts.fingerprints = !a.no_fingerprints;
    DescentResult res = descent(a.start, a.k_min, cache, opts);
    cache.persist();
    if (a.format == "csv") {
        std::cout << "m,h,h_lemma,k_lo,k_hi,next_m,bits,digits,seconds\n";
        for (const DescentRow& r : res.rows)
            std::cout << r.m << ',' << r.h << ',' << r.h_lemma << ','
                      << r.window.k_lo << ',' << r.window.k_hi << ','
                      << r.next_m << ',' << r.fingerprint.bits << ','
                      << r.fingerprint.digit_count << ',' << r.seconds << "\n";
        std::cout << "# coverage: " << (res.coverage.passed ? "pass" : "fail")
                  << " - " << res.coverage.detail << "\n";
    } else {
        json rows = json::array();
        for (const DescentRow& r : res.rows)
            rows.push_back(json{{"m", r.m},
                                {"h", r.h},
                                {"h_lemma", r.h_lemma},
                                {"k_lo", r.window.k_lo},
                                {"k_hi", r.window.k_hi},
                                {"next_m", r.next_m},
                                {"fingerprint",
                                 json{{"bits", r.fingerprint.bits},
                                      {"digits", r.fingerprint.digit_count},
                                      {"residues", r.fingerprint.residues}}}});
        emit(json{{"m_start", res.m_start},
                  {"k_min", res.k_min},
                  {"coverage", verdict_json(res.coverage)},
                  {"rows", std::move(rows)}});
    }
    return res.coverage.passed ? 0 : 1;
}

struct PhiArgs {
    std::uint64_t alpha = 3, beta = 9, gamma = 4;
    bool primed = false;
};

int run_phi(const PhiArgs& a) {
    ProfileParams params{a.alpha, a.beta, a.gamma};
    PhiIntervalSet set = solve_profile_intervals(params, a.primed);
    json intervals = json::array();
    for (const PhiInterval& iv : set.intervals)
        intervals.push_back(json{{"lo", ratio_json(iv.lo)},
                                 {"hi", ratio_json(iv.hi)},
                                 {"lo_closed", iv.lo_closed},
                                 {"hi_closed", iv.hi_closed}});
    emit(json{{"alpha", a.alpha},
              {"beta", a.beta},
              {"gamma", a.gamma},
              {"primed", a.primed},
              {"intervals", std::move(intervals)},
              {"linear_rate", ratio_json(linear_phi_rate(set, 1))}});
    return 0;
}

struct PadeArgs {
    std::uint64_t m = 1, j = 1;
    std::string variant = "n";
    std::uint64_t terms = 0;
    std::size_t digits = 40;
};

int run_pade(const PadeArgs& a) {
    const WitnessVariant v = a.variant == "n1" ? WitnessVariant::order_n_plus_one
                                               : WitnessVariant::order_n;
    Eq15Witness w = eq15_witness(a.m, a.j, v, a.terms);
    emit(json{{"m", w.m},
              {"j", w.j},
              {"k", w.k},
              {"variant", a.variant},
              {"value", w.m_value.to_decimal()},
              {"nonzero", w.nonzero},
              {"residual", w.residual.to_decimal(a.digits)},
              {"residual_bound", w.residual_bound.to_decimal(a.digits)},
              {"terms", w.terms}});
    return 0;
}

int run_constants(std::uint64_t theta_limit) {
    ConstantLedger ledger = full_ledger(theta_limit);
    json entries = json::array();
    for (const LedgerEntry& e : ledger.entries)
        entries.push_back(json{{"name", e.name},
                               {"stated", e.stated},
                               {"direction", e.direction == Direction::upper_bound
                                                 ? "upper_bound"
                                                 : e.direction == Direction::lower_bound
                                                       ? "lower_bound"
                                                       : "equals"},
                               {"computed", e.computed},
                               {"margin", e.margin},
                               {"passed", e.passed}});
    emit(json{{"overall", ledger.overall}, {"entries", std::move(entries)}});
    return ledger.overall ? 0 : 1;
}

int run_theta(std::uint64_t limit) {
    ThetaTable table = theta_sieve(limit);
    Verdict v = verify_theta_bounds(table);
    ThetaValue at_limit = theta(table, limit);
    emit(json{{"limit", limit},
              {"primes", table.primes.size()},
              {"theta_at_limit", at_limit.value},
              {"error_bound", at_limit.err},
              {"result", verdict_json(v)}});
    return v.passed ? 0 : 1;
}

struct CertifyArgs {
    RunConfig config = default_config();
    std::string redundancy = "6:2000";
    std::string out;
    bool compact = false;
};

int run_certify(CertifyArgs& a) {
    const size_t colon = a.redundancy.find(':');
    if (colon == std::string::npos)
        throw usage_error("redundancy range must look like LO:HI");
    try {
        a.config.redundancy_lo = std::stoull(a.redundancy.substr(0, colon));
        a.config.redundancy_hi = std::stoull(a.redundancy.substr(colon + 1));
    } catch (const std::exception&) {
        throw usage_error("redundancy range must look like LO:HI");
    }
    CertificateReport rep = certify_run(a.config);
    const std::string text = render_report(rep, !a.compact);
    if (a.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(a.out, std::ios::trunc);
        if (!f) throw usage_error("cannot open output file " + a.out);
        f << text << "\n";
        std::cerr << (rep.overall ? "certified" : "NOT certified")
                  << "; report written to " << a.out << "\n";
    }
    return rep.overall ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates that powers of 4/3 keep their distance "
                 "from the nearest integer"};
    app.require_subcommand(1);

    DirectArgs direct;
    auto* cmd_direct = app.add_subcommand(
        "direct", "exact per-exponent check over a range");
    cmd_direct->add_option("--from", direct.from, "first exponent")->required();
    cmd_direct->add_option("--to", direct.to, "last exponent")->required();
    cmd_direct->add_option("--workers", direct.workers, "parallel workers");
    cmd_direct->add_option("--rows", direct.rows,
                           "also print per-exponent rows for the first N");
    cmd_direct->add_option("--digits", direct.digits,
                           "decimal digits for printed distances");

    DescentArgs desc;
    if (const char* env = std::getenv("FRACPOW_CACHE")) desc.cache = env;
    auto* cmd_descent = app.add_subcommand(
        "descent", "chain run-length windows from a start exponent down");
    cmd_descent->add_option("--start", desc.start, "starting exponent");
    cmd_descent->add_option("--k-min", desc.k_min, "stop once coverage reaches this");
    cmd_descent->add_option("--emit", desc.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_descent->add_option("--cache", desc.cache, "power cache file");
    cmd_descent->add_option("--mem-cap", desc.mem_cap, "memory cap in bytes");
    cmd_descent->add_flag("--no-verify-blocks", desc.no_verify_blocks,
                          "skip the per-window block re-scan");
    cmd_descent->add_flag("--no-fingerprints", desc.no_fingerprints,
                          "skip modular fingerprints");

    PhiArgs phi;
    auto* cmd_phi = app.add_subcommand(
        "phi", "prime-exponent profile intervals and linear rate");
    cmd_phi->add_option("--alpha", phi.alpha, "profile parameter alpha");
    cmd_phi->add_option("--beta", phi.beta, "profile parameter beta");
    cmd_phi->add_option("--gamma", phi.gamma, "profile parameter gamma");
    cmd_phi->add_flag("--primed", phi.primed, "use the primed profile");

    PadeArgs pade;
    auto* cmd_pade = app.add_subcommand(
        "pade", "integer witness from the rational approximation identity");
    cmd_pade->add_option("--m", pade.m, "witness index (a = 3m, b = 9m, n = 4m)")
        ->required();
    cmd_pade->add_option("--j", pade.j, "offset, 1..17");
    cmd_pade->add_option("--variant", pade.variant, "approximation order")
        ->check(CLI::IsMember({"n", "n1"}));
    cmd_pade->add_option("--terms", pade.terms,
                         "remainder series terms (0 = grow automatically)");
    cmd_pade->add_option("--digits", pade.digits,
                         "decimal digits for printed residuals");

    std::uint64_t constants_theta = 20000000;
    auto* cmd_constants = app.add_subcommand(
        "constants", "validate every printed constant with certified margins");
    cmd_constants->add_option("--theta-limit", constants_theta,
                              "sieve limit for the theta window");

    std::uint64_t theta_limit = 20000000;
    auto* cmd_theta = app.add_subcommand(
        "theta", "sieve the prime log sum and check the linear window");
    cmd_theta->add_option("--limit", theta_limit, "sieve limit");

    CertifyArgs cert;
    auto* cmd_certify = app.add_subcommand(
        "certify", "full certificate: ledger, descent, redundancy, strictness");
    cmd_certify->add_option("--m-start", cert.config.m_start, "descent start");
    cmd_certify->add_option("--k-min", cert.config.k_min, "descent floor");
    cmd_certify->add_option("--direct-redundancy", cert.redundancy,
                            "independent exact re-check range LO:HI");
    cmd_certify->add_option("--sieve-limit", cert.config.sieve_limit,
                            "theta sieve limit");
    cmd_certify->add_option("--mem-cap", cert.config.mem_cap_bytes,
                            "memory cap in bytes");
    cmd_certify->add_option("--workers", cert.config.workers, "parallel workers");
    cmd_certify->add_option("--cache", cert.config.cache_path, "power cache file");
    cmd_certify->add_option("--out", cert.out, "write the report here");
    cmd_certify->add_flag("--compact", cert.compact, "single-line JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_direct)) return run_direct(direct);
        if (app.got_subcommand(cmd_descent)) return run_descent(desc);
        if (app.got_subcommand(cmd_phi)) return run_phi(phi);
        if (app.got_subcommand(cmd_pade)) return run_pade(pade);
        if (app.got_subcommand(cmd_constants)) return run_constants(constants_theta);
        if (app.got_subcommand(cmd_theta)) return run_theta(theta_limit);
        if (app.got_subcommand(cmd_certify)) return run_certify(cert);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.progress.empty()) std::cerr << "progress: " << e.progress << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
