#include "fracpow/certify.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace fracpow {
namespace {

using nlohmann::json;

const char* kStrictnessNote =
    "the comparison is min(r, 3^k - r) * 3^k against 4^k; the left side is a "
    "multiple of 3 and the right side is congruent to 1 mod 3, so the two "
    "can never be equal and every certified inequality is strict";

// The structural fact behind the note, checked exactly on a prefix of
// exponents (it holds identically for all k >= 1).
Verdict strictness_check() {
    const Natural three(3);
    for (std::uint64_t k = 1; k <= 64; ++k) {
        const Natural pow3 = Natural::pow(3, k);
        const Natural pow4 = Natural::pow(4, k);
        const Natural r = Natural::divmod(pow4, pow3).second;
        const Natural other = pow3 - r;
        const Natural& s = std::min(r, other);
        if (!Natural::divmod(s * pow3, three).second.is_zero())
            return make_fail("left side not a multiple of 3", "k=" + std::to_string(k));
        if (Natural::divmod(pow4, three).second != Natural(1))
            return make_fail("4^k not congruent to 1 mod 3", "k=" + std::to_string(k));
    }
    return make_pass("sides differ mod 3 for k = 1..64 and structurally beyond");
}

json verdict_json(const Verdict& v) {
    json j{{"passed", v.passed}, {"detail", v.detail}};
    if (v.witness) j["witness"] = *v.witness;
    return j;
}

const char* direction_name(Direction d) {
    switch (d) {
    case Direction::upper_bound: return "upper_bound";
    case Direction::lower_bound: return "lower_bound";
    default: return "equals";
    }
}

} // namespace

RunConfig default_config() {
    RunConfig c;
    if (const char* env = std::getenv("FRACPOW_CACHE")) c.cache_path = env;
    return c;
}

CertificateReport certify_run(const RunConfig& config) {
    CertificateReport rep;
    rep.config = config;
    rep.claim_from = std::max<std::uint64_t>(6, config.k_min);

    rep.ledger = full_ledger(config.sieve_limit);
    ThresholdCertificate tc = analytic_threshold();
    rep.k_star = tc.k_star;
    rep.threshold = std::move(tc.verdict);

    rep.strictness = strictness_check();
    rep.strictness_note = kStrictnessNote;

    rep.redundancy =
        config.redundancy_hi >= config.redundancy_lo
            ? check_range(config.redundancy_lo, config.redundancy_hi, config.workers)
            : make_pass("redundancy range empty");

    PowerCache cache(config.cache_path);
    DescentOptions opts;
    opts.mem_cap_bytes = config.mem_cap_bytes;
    rep.descent = descent(config.m_start, config.k_min, cache, opts);
    cache.persist();

    const bool bridged = config.m_start + 1 >= rep.k_star;
    rep.overall = rep.ledger.overall && rep.threshold.passed &&
                  rep.descent.coverage.passed && rep.redundancy.passed &&
                  rep.strictness.passed && bridged &&
                  config.k_min <= rep.claim_from;
    return rep;
}

std::string render_report(const CertificateReport& report, bool pretty) {
    json j;
    j["version"] = report.version;
    j["claim"] = "norm((4/3)^k) > (4/9)^k for every k >= " +
                 std::to_string(report.claim_from);
    j["overall"] = report.overall;

    j["config"] = json{{"m_start", report.config.m_start},
                       {"k_min", report.config.k_min},
                       {"redundancy_from", report.config.redundancy_lo},
                       {"redundancy_to", report.config.redundancy_hi},
                       {"sieve_limit", report.config.sieve_limit},
                       {"mem_cap_bytes", report.config.mem_cap_bytes},
                       {"workers", report.config.workers},
                       {"cache_path", report.config.cache_path}};

    json entries = json::array();
    for (const LedgerEntry& e : report.ledger.entries)
        entries.push_back(json{{"name", e.name},
                               {"stated", e.stated},
                               {"direction", direction_name(e.direction)},
                               {"computed", e.computed},
                               {"margin", e.margin},
                               {"passed", e.passed}});
    j["analytic"] = json{{"k_star", report.k_star},
                         {"threshold", verdict_json(report.threshold)},
                         {"ledger", json{{"overall", report.ledger.overall},
                                         {"entries", std::move(entries)}}}};

    json rows = json::array();
    for (const DescentRow& r : report.descent.rows)
        rows.push_back(json{{"m", r.m},
                            {"h", r.h},
                            {"h_lemma", r.h_lemma},
                            {"k_lo", r.window.k_lo},
                            {"k_hi", r.window.k_hi},
                            {"next_m", r.next_m},
                            {"fingerprint", json{{"bits", r.fingerprint.bits},
                                                 {"digits", r.fingerprint.digit_count},
                                                 {"residues", r.fingerprint.residues}}}});
    j["finite"] = json{{"m_start", report.descent.m_start},
                       {"k_min", report.descent.k_min},
                       {"coverage", verdict_json(report.descent.coverage)},
                       {"rows", std::move(rows)}};
    if (report.config.m_start + 1 < report.k_star)
        j["finite"]["gap"] = json{{"from", report.config.m_start + 1},
                                  {"to", report.k_star - 1}};

    j["redundancy"] = json{{"from", report.config.redundancy_lo},
                           {"to", report.config.redundancy_hi},
                           {"result", verdict_json(report.redundancy)}};
    j["strictness"] = json{{"passed", report.strictness.passed},
                           {"note", report.strictness_note}};
    return pretty ? j.dump(2) : j.dump();
}

} // namespace fracpow
