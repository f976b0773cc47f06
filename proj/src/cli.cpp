#include "llratio/cli.hpp"

#include "llratio/arith.hpp"
#include "llratio/characters.hpp"
#include "llratio/distribution.hpp"
#include "llratio/errors.hpp"
#include "llratio/io_util.hpp"
#include "llratio/lvalues.hpp"
#include "llratio/moments.hpp"
#include "llratio/stieltjes.hpp"
#include "llratio/verify.hpp"

#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace llr {

namespace {

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    if (cfg.format.empty()) return;
    for (const char* a : allowed)
        if (cfg.format == a) return;
    throw std::invalid_argument("unsupported --format '" + cfg.format + "' for this subcommand");
}

std::vector<int64_t> qs_or(const RunConfig& cfg, std::vector<int64_t> fallback) {
    return cfg.qs.empty() ? std::move(fallback) : cfg.qs;
}

// shared by every subcommand that needs per-character data
struct PerQ {
    CharacterTable tab;
    StieltjesTable st;
    std::vector<LValueRecord> recs;
};

PerQ compute_q(int64_t q, int jobs) {
    PerQ p;
    p.tab = build_table(q);
    p.st = build_stieltjes_table(q, 32, jobs);
    p.recs = l_values_all(p.tab, p.st, SumPath::batched, jobs);
    return p;
}

} // namespace

int cmd_lvalues(const RunConfig& cfg) {
    require_format(cfg, {"csv"});
    if (cfg.qs.empty()) throw std::invalid_argument("lvalues: at least one --q is required");
    std::string out;
    bool first = true;
    for (int64_t q : cfg.qs) {
        const PerQ p = compute_q(q, cfg.jobs);
        std::string csv = l_values_csv(q, p.recs);
        if (!first) csv.erase(0, csv.find('\n') + 1); // keep a single header
        out += csv;
        first = false;
    }
    write_output(cfg.out, out);
    return kExitOk;
}

int cmd_dist(const RunConfig& cfg) {
    require_format(cfg, {"csv"});
    const auto qs = qs_or(cfg, {59, 101, 257});
    std::vector<EmpiricalDistribution> dists;
    dists.reserve(qs.size());
    for (int64_t q : qs) {
        const PerQ p = compute_q(q, cfg.jobs);
        dists.push_back(make_distribution(q, p.recs));
    }
    write_output(cfg.out, figure_csv(dists, cfg.grid_start, cfg.grid_stop, cfg.grid_step));
    return kExitOk;
}

int cmd_mk(const RunConfig& cfg) {
    require_format(cfg, {"json"});
    if (cfg.ks.empty()) throw std::invalid_argument("mk: at least one --k is required");
    const auto est = moment_constants(cfg.ks, cfg.truncation);
    write_output(cfg.out, moments_json(est));
    return kExitOk;
}

int cmd_empirical(const RunConfig& cfg) {
    require_format(cfg, {"json"});
    const auto qs = qs_or(cfg, {101, 257, 509, 1009, 2003, 4001});
    std::vector<int> ks = cfg.ks.empty() ? std::vector<int>{1, 2} : cfg.ks;
    std::vector<EmpiricalDistribution> dists;
    dists.reserve(qs.size());
    for (int64_t q : qs) {
        const PerQ p = compute_q(q, cfg.jobs);
        dists.push_back(make_distribution(q, p.recs));
    }
    const auto est = moment_constants(ks, cfg.truncation);
    std::vector<ConvergenceReport> reports;
    for (const auto& e : est) {
        // midpoint of the enclosure as the finite-truncation reference
        const double ref = e.partial + 0.5 * e.tail_bound;
        reports.push_back(convergence_report(dists, e.k, ref));
    }
    write_output(cfg.out, convergence_json(reports));
    return kExitOk;
}

int cmd_stieltjes(const RunConfig& cfg) {
    require_format(cfg, {"csv"});
    if (cfg.qs.size() != 1) throw std::invalid_argument("stieltjes: exactly one --q is required");
    const auto t = build_stieltjes_table(cfg.qs[0], 32, cfg.jobs);
    write_output(cfg.out, stieltjes_csv(t));
    return kExitOk;
}

int cmd_tail(const RunConfig& cfg) {
    require_format(cfg, {"csv", "json"});
    if (cfg.qs.size() != 1) throw std::invalid_argument("tail: exactly one --q is required");
    const int64_t q = cfg.qs[0];
    const PerQ p = compute_q(q, cfg.jobs);
    const auto rep = tail_report(make_distribution(q, p.recs), cfg.thresholds);
    if (cfg.format == "json") {
        nlohmann::ordered_json o;
        o["q"] = rep.q;
        o["fitted_A"] = fmt17(rep.fitted_A);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (size_t i = 0; i < rep.thresholds.size(); ++i) {
            nlohmann::ordered_json r;
            r["t"] = fmt17(rep.thresholds[i]);
            r["fraction"] = fmt17(rep.fractions[i]);
            r["reference"] = fmt17(rep.references[i]);
            rows.push_back(std::move(r));
        }
        o["rows"] = std::move(rows);
        write_output(cfg.out, o.dump(2) + "\n");
    } else {
        write_output(cfg.out, tail_csv(rep));
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    std::ostringstream os;
    const VerifyResult res = run_suite(cfg.suite, os);
    write_output(cfg.out, os.str());
    return res.failures == 0 ? kExitOk : kExitTolerance;
}

} // namespace llr
