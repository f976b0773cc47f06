#include "llratio/cli.hpp"
#include "llratio/errors.hpp"

#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include <CLI11.hpp>

namespace {

// "start:stop:step" -> three doubles
void parse_grid(const std::string& s, llr::RunConfig& cfg) {
    double a = 0, b = 0, c = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf%c", &a, &b, &c, &tail) != 3)
        throw CLI::ValidationError("--grid", "expected start:stop:step");
    cfg.grid_start = a;
    cfg.grid_stop = b;
    cfg.grid_step = c;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distribution of |L'/L(1,chi)| over Dirichlet characters mod odd primes"};
    app.require_subcommand(1);

    llr::RunConfig cfg;
    std::string grid;
    std::function<int(const llr::RunConfig&)> body;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "write to this file (atomically); default stdout");
        sub->add_option("--format", cfg.format, "csv or json where the subcommand supports both")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--jobs", cfg.jobs, "worker threads; 0 = LLRATIO_JOBS or hardware")
            ->check(CLI::NonNegativeNumber);
    };
    auto bind = [&](CLI::App* sub, int (*fn)(const llr::RunConfig&)) {
        add_common(sub);
        sub->callback([&body, fn] { body = fn; });
        return sub;
    };

    auto* lv = bind(app.add_subcommand("lvalues", "L(1), L'(1) and |L'/L(1)| per character (CSV)"),
                    llr::cmd_lvalues);
    lv->add_option("--q", cfg.qs, "odd prime moduli")->delimiter(',');

    auto* di = bind(app.add_subcommand("dist", "empirical CDFs of the ratios on a t-grid (CSV)"),
                    llr::cmd_dist);
    di->add_option("--q", cfg.qs, "odd prime moduli; default 59,101,257")->delimiter(',');
    di->add_option("--grid", grid, "t-grid as start:stop:step; default 0:8:0.01");

    auto* mk = bind(app.add_subcommand("mk", "moment-constant enclosures [partial, partial+tail] (JSON)"),
                    llr::cmd_mk);
    mk->add_option("--k", cfg.ks, "moment orders, 0..20")->delimiter(',')
        ->check(CLI::Range(0, 20));
    mk->add_option("--truncation", cfg.truncation, "series truncation M >= 16; default 1e7");

    auto* em = bind(app.add_subcommand(
                        "empirical", "empirical 2k-th moments vs the limit across moduli (JSON)"),
                    llr::cmd_empirical);
    em->add_option("--q", cfg.qs, "odd prime moduli; default 101,257,509,1009,2003,4001")
        ->delimiter(',');
    em->add_option("--k", cfg.ks, "moment orders; default 1,2")->delimiter(',')
        ->check(CLI::Range(0, 20));
    em->add_option("--truncation", cfg.truncation, "truncation for the reference; default 1e7");

    auto* st = bind(app.add_subcommand("stieltjes", "gamma_0 and gamma_1 at a/q with error bounds (CSV)"),
                    llr::cmd_stieltjes);
    st->add_option("--q", cfg.qs, "odd prime modulus")->delimiter(',');

    auto* ta = bind(app.add_subcommand("tail", "upper-tail fractions vs exp(-sqrt(t)/2) (CSV/JSON)"),
                    llr::cmd_tail);
    ta->add_option("--q", cfg.qs, "odd prime modulus")->delimiter(',');
    ta->add_option("--thresholds", cfg.thresholds, "ascending thresholds; default 1,4,9,16")
        ->delimiter(',');

    auto* ve = bind(app.add_subcommand("verify", "run a self-check suite"), llr::cmd_verify);
    ve->add_option("--suite", cfg.suite,
                   "arith, characters, stieltjes, lvalues, moments, distribution or all");

    try {
        app.parse(argc, argv);
        if (!grid.empty()) parse_grid(grid, cfg);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? llr::kExitOk : llr::kExitUsage;
    }

    if (!body) return llr::kExitUsage;

    try {
        return body(cfg);
    } catch (const llr::InvalidModulusError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return llr::kExitBadModulus;
    } catch (const llr::ToleranceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return llr::kExitTolerance;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return llr::kExitUsage;
    }
}
