#include "llratio/verify.hpp"

#include "llratio/arith.hpp"
#include "llratio/characters.hpp"
#include "llratio/distribution.hpp"
#include "llratio/io_util.hpp"
#include "llratio/lvalues.hpp"
#include "llratio/moments.hpp"
#include "llratio/stieltjes.hpp"
#include "llratio/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace llr {

namespace {

struct Ctx {
    std::ostream& out;
    const char* suite;
    VerifyResult& res;
};

void record_failure(Ctx& c, const char* name, double observed, double bound) {
    nlohmann::ordered_json o;
    o["suite"] = c.suite;
    o["check"] = name;
    o["observed"] = fmt17(observed);
    o["bound"] = fmt17(bound);
    c.out << o.dump() << '\n';
    ++c.res.failures;
}

// passes when |observed| <= bound
void check_le(Ctx& c, const char* name, double observed, double bound) {
    ++c.res.checks;
    if (!(std::abs(observed) <= bound)) record_failure(c, name, observed, bound);
}

void check_true(Ctx& c, const char* name, bool ok) {
    ++c.res.checks;
    if (!ok) record_failure(c, name, 0.0, 1.0);
}

// ---- suites -----------------------------------------------------------------

void suite_arith(Ctx& c) {
    check_true(c, "primitive_root_5_is_2", primitive_root(5) == 2);
    check_true(c, "primitive_root_7_is_3", primitive_root(7) == 3);
    check_true(c, "odd_prime_classification",
               is_odd_prime(101) && is_odd_prime(4001) && !is_odd_prime(2) && !is_odd_prime(1) &&
                   !is_odd_prime(91) && !is_odd_prime(4002));
    check_true(c, "coprime_part_strips_all",
               coprime_part(354, 59) == 6 && coprime_part(59, 60) == 59 && coprime_part(8, 2) == 1);

    const uint64_t M = 20000;
    const auto sieve = mangoldt_sieve(M);
    NeumaierSum psi;
    for (uint64_t m = 2; m <= M; ++m) psi.add(sieve.values[m]);
    // Chebyshev: psi(x) stays within a few percent of x in this range
    check_le(c, "chebyshev_psi_near_x", psi.value() - static_cast<double>(M), 0.02 * M);

    auto c2 = lambda_convolution(2, sieve);
    auto c3 = lambda_convolution(3, sieve);
    auto c4 = lambda_convolution(4, sieve);
    double worst = 0.0;
    for (const auto* t : {&c2, &c3, &c4}) {
        for (uint64_t m = 2; m <= M; ++m) {
            const double cap = std::pow(std::log(static_cast<double>(m)), t->k);
            worst = std::max(worst, t->values[m] - cap);
        }
    }
    check_le(c, "convolution_log_power_cap", worst, 1e-12);
}

void suite_characters(Ctx& c) {
    for (int64_t q : {7, 61}) {
        const auto tab = build_table(q);
        bool bij = true;
        std::vector<bool> seen(q - 1, false);
        for (int64_t n = 1; n < q; ++n) {
            if (seen[tab.dlog[n]]) bij = false;
            seen[tab.dlog[n]] = true;
        }
        check_true(c, "dlog_bijection", bij);
        bool conj_exact = true;
        for (int64_t b = 1; b <= q - 2 && conj_exact; ++b)
            for (int64_t n = 1; n < q; ++n)
                if (tab.chi(q - 1 - b, n) != std::conj(tab.chi(b, n))) {
                    conj_exact = false;
                    break;
                }
        check_true(c, "conjugate_pairing_exact", conj_exact);
        double worst_mult = 0.0;
        for (int64_t b = 0; b <= q - 2; ++b)
            for (int64_t m = 1; m < q; ++m)
                for (int64_t n = 1; n < q; ++n)
                    worst_mult = std::max(worst_mult,
                                          std::abs(tab.chi(b, m * n) - tab.chi(b, m) * tab.chi(b, n)));
        check_le(c, "multiplicativity", worst_mult, 1e-12);
        double worst_row = 0.0;
        for (int64_t b = 1; b <= q - 2; ++b) {
            std::complex<double> s{0.0, 0.0};
            for (int64_t n = 1; n < q; ++n) s += tab.chi(b, n);
            worst_row = std::max(worst_row, std::abs(s));
        }
        check_le(c, "nonprincipal_row_sums_vanish", worst_row, 1e-10);
        double worst_orth = 0.0;
        for (uint64_t m = 1; m <= 40; ++m)
            for (uint64_t n = 1; n <= 40; ++n) {
                const bool off = m % q == 0 || n % q == 0;
                double expected;
                if (off)
                    expected = 1.0;
                else
                    expected = (m % q == n % q) ? static_cast<double>(q - 1) : 0.0;
                worst_orth = std::max(worst_orth, std::abs(orthogonality_sum(tab, m, n) - expected));
            }
        check_le(c, "orthogonality_identity", worst_orth, 1e-9);
    }
}

void suite_stieltjes(Ctx& c) {
    check_le(c, "digamma_at_1", digamma(1.0) + kEulerGamma, 1e-13);
    check_le(c, "digamma_at_half", digamma(0.5) + kEulerGamma + 2.0 * std::log(2.0), 1e-13);
    const double x = 0.2;
    check_le(c, "digamma_reflection",
             digamma(1.0 - x) - digamma(x) - std::numbers::pi / std::tan(std::numbers::pi * x),
             1e-11);
    check_le(c, "gamma1_at_1", gamma1_at(1.0) - kGamma1At1, 1e-12);
    for (int64_t q : {59, 101, 257}) {
        const auto t = build_stieltjes_table(q);
        const double lq = std::log(static_cast<double>(q));
        NeumaierSum s0, s1;
        for (int64_t a = 1; a < q; ++a) {
            s0.add(-t.gamma0[a - 1]); // psi(a/q)
            s1.add(t.gamma1[a - 1]);
        }
        s0.add(digamma(1.0));
        s1.add(gamma1_at(1.0));
        check_le(c, "digamma_multiplication_identity",
                 s0.value() + static_cast<double>(q) * (kEulerGamma + lq), 1e-9 * q);
        check_le(c, "gamma1_multiplication_identity",
                 s1.value() -
                     static_cast<double>(q) * (kGamma1At1 - kEulerGamma * lq - 0.5 * lq * lq),
                 1e-8 * q);
        double worst = 0.0;
        for (double e : t.err_bound) worst = std::max(worst, e);
        check_le(c, "per_entry_error_bound", worst, 1e-12);
    }
}

void suite_lvalues(Ctx& c) {
    { // quadratic character mod 5 has the closed form (2/sqrt5) log golden
        const auto tab = build_table(5);
        const auto st = build_stieltjes_table(5);
        const auto recs = l_values_all(tab, st);
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        const double expected = 2.0 / std::sqrt(5.0) * std::log(golden);
        check_le(c, "quadratic_mod5_closed_form", recs[1].L1.real() - expected, 1e-8);
        check_le(c, "quadratic_mod5_imag_part", recs[1].L1.imag(), 1e-12);
    }
    for (int64_t q : {59, 101}) {
        const auto tab = build_table(q);
        const auto st = build_stieltjes_table(q);
        const auto fast = l_values_all(tab, st, SumPath::batched);
        const auto slow = l_values_all(tab, st, SumPath::direct);
        double worst = 0.0;
        for (size_t i = 0; i < fast.size(); ++i) {
            worst = std::max(worst, std::abs(fast[i].L1 - slow[i].L1));
            worst = std::max(worst, std::abs(fast[i].Lp1 - slow[i].Lp1));
            worst = std::max(worst, std::abs(fast[i].ratio - slow[i].ratio));
        }
        check_le(c, "batched_matches_direct", worst, 1e-9);
        bool pairs = true;
        for (const auto& recs : {fast, slow})
            for (int64_t b = 1; b <= q - 2; ++b) {
                const auto& r = recs[b - 1];
                const auto& rc = recs[q - 1 - b - 1];
                if (rc.L1 != std::conj(r.L1) || rc.Lp1 != std::conj(r.Lp1) || rc.ratio != r.ratio)
                    pairs = false;
            }
        check_true(c, "conjugate_records_exact", pairs);
        bool sane = true;
        for (const auto& r : fast)
            if (!(r.ratio > 0.0) || !(r.ratio < 25.0) || !std::isfinite(r.ratio)) sane = false;
        check_true(c, "ratios_positive_finite", sane);
        // summing the character sums over all b (principal included) projects
        // onto a == 1: sum_b S_0(b) = (q-1) gamma_0(1/q)
        std::complex<double> tot{0.0, 0.0};
        for (int64_t b = 0; b <= q - 2; ++b) {
            std::complex<double> s{0.0, 0.0};
            for (int64_t a = 1; a < q; ++a) s += tab.chi(b, a) * st.gamma0[a - 1];
            tot += s;
        }
        check_le(c, "character_sum_projection",
                 std::abs(tot - static_cast<double>(q - 1) * st.gamma0[0]), 1e-8 * q);
    }
}

void suite_moments(Ctx& c) {
    const int ks[] = {0, 1, 2, 3, 4, 5, 6};
    const auto e1 = moment_constants(ks, 100000);
    const auto e2 = moment_constants(ks, 400000);
    check_true(c, "k0_partial_exact", e1[0].partial == 1.0 && e1[0].tail_bound == 0.0);
    bool nested = true;
    for (size_t i = 0; i < e1.size(); ++i) {
        if (e2[i].partial + 1e-12 < e1[i].partial) nested = false;
        if (e2[i].partial + e2[i].tail_bound > e1[i].partial + e1[i].tail_bound + 1e-12)
            nested = false;
    }
    check_true(c, "intervals_nest_with_truncation", nested);
    double worst = 0.0;
    for (const auto& e : e1)
        worst = std::max(worst, e.partial + e.tail_bound - e.upper_bound_apriori);
    check_le(c, "a_priori_moment_cap", worst, 1e-6);

    std::vector<int> all;
    for (int k = 1; k <= 20; ++k) all.push_back(k);
    const auto big = moment_constants(all, 1 << 21);
    double prev = 0.0;
    bool increasing = true;
    for (int K = 1; K <= 20; ++K) {
        const double s = carleman_partial_sum(K, big);
        if (!(s > prev)) increasing = false;
        prev = s;
    }
    check_true(c, "carleman_strictly_increasing", increasing);
    // Stirling floor: (partial+tail)^{-1/2k} >= ((2k)! + (k/e)^{2k})^{-1/2k},
    // which is at least ~e/(4k) for moderate k
    bool floored = true;
    for (int k = 1; k <= 6; ++k) {
        const double term =
            carleman_partial_sum(k, big) - (k > 1 ? carleman_partial_sum(k - 1, big) : 0.0);
        if (term < 0.5 * std::numbers::e / (2.0 * k + 1.0)) floored = false;
    }
    check_true(c, "carleman_terms_above_stirling_floor", floored);
}

void suite_distribution(Ctx& c) {
    for (int64_t q : {101, 257}) {
        const auto tab = build_table(q);
        const auto st = build_stieltjes_table(q);
        const auto recs = l_values_all(tab, st);
        const auto d = make_distribution(q, recs);
        check_true(c, "cdf_limits", empirical_cdf(d, -1.0) == 0.0 && empirical_cdf(d, 1e9) == 1.0);
        bool monotone = true;
        double maxoff = 0.0, last = 0.0;
        for (int i = 0; i <= 800; ++i) {
            const double v = empirical_cdf(d, 0.01 * i);
            if (v < last) monotone = false;
            last = v;
            const double scaled = v * static_cast<double>(q - 2);
            maxoff = std::max(maxoff, std::abs(scaled - std::round(scaled)));
        }
        check_true(c, "cdf_monotone", monotone);
        check_le(c, "step_mass_integer_multiples", maxoff, 1e-9);
        check_true(c, "moment_k0_is_one", empirical_moment(d, 0) == 1.0);
        int odd_groups = 0;
        for (size_t i = 0; i < d.ratios.size();) {
            size_t j = i;
            while (j < d.ratios.size() && d.ratios[j] == d.ratios[i]) ++j;
            if ((j - i) % 2 != 0) ++odd_groups;
            i = j;
        }
        check_true(c, "conjugate_tie_multiplicities", odd_groups <= 1);
        const double thr[] = {1.0, 4.0, 9.0, 16.0};
        const auto tr = tail_report(d, thr);
        bool dec = true;
        for (size_t i = 1; i < tr.fractions.size(); ++i)
            if (tr.fractions[i] > tr.fractions[i - 1]) dec = false;
        check_true(c, "tail_fractions_non_increasing", dec);
        check_true(c, "tail_fit_positive", tr.fitted_A >= 0.0 && std::isfinite(tr.fitted_A));
    }
}

} // namespace

VerifyResult run_suite(const std::string& name, std::ostream& out) {
    VerifyResult res;
    auto run_one = [&](const char* suite, void (*fn)(Ctx&)) {
        VerifyResult sub;
        Ctx c{out, suite, sub};
        fn(c);
        out << "suite " << suite << ": " << (sub.checks - sub.failures) << "/" << sub.checks
            << " checks passed\n";
        res.checks += sub.checks;
        res.failures += sub.failures;
    };
    bool known = false;
    auto want = [&](const char* s) {
        const bool w = name == "all" || name == s;
        if (name == s) known = true;
        return w;
    };
    if (name == "all") known = true;
    if (want("arith")) run_one("arith", suite_arith);
    if (want("characters")) run_one("characters", suite_characters);
    if (want("stieltjes")) run_one("stieltjes", suite_stieltjes);
    if (want("lvalues")) run_one("lvalues", suite_lvalues);
    if (want("moments")) run_one("moments", suite_moments);
    if (want("distribution")) run_one("distribution", suite_distribution);
    if (!known) throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
    return res;
}

} // namespace llr
