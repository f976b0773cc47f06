#include "llratio/moments.hpp"

#include "llratio/arith.hpp"
#include "llratio/io_util.hpp"
#include "llratio/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace llr {

namespace {

void check_k_M(int k, uint64_t M, const char* who) {
    if (k < 0 || k > 20) throw std::invalid_argument(std::string(who) + ": k must be in [0, 20]");
    if (M < 16) throw std::invalid_argument(std::string(who) + ": truncation must be >= 16");
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double apriori_bound(int k) {
    const double second = k == 0 ? 1.0 : std::pow(static_cast<double>(k) / std::numbers::e, 2.0 * k);
    return factorial(2 * k) + second;
}

} // namespace

double moment_tail_bound(int k, uint64_t M) {
    check_k_M(k, M, "moment_tail_bound");
    if (k == 0) return 0.0;
    const double u0 = std::log(static_cast<double>(M) - 1.0);
    // Gamma(2k+1, u0) = (2k)! e^{-u0} sum_{i<=2k} u0^i / i!
    double term = 1.0, s = 1.0;
    for (int i = 1; i <= 2 * k; ++i) {
        term *= u0 / i;
        s += term;
    }
    double g = factorial(2 * k) * std::exp(-u0) * s;
    // (log t)^{2k}/t^2 peaks at log t = k; when the truncation sits left of
    // the peak, the sum-vs-integral comparison needs the peak value once
    if (u0 < static_cast<double>(k)) g += std::pow(static_cast<double>(k) / std::numbers::e, 2.0 * k);
    return g * (1.0 + 1e-12); // keep it an upper bound under rounding
}

std::vector<MomentEstimate> moment_constants(std::span<const int> ks, uint64_t M) {
    if (ks.empty()) throw std::invalid_argument("moment_constants: no k requested");
    std::vector<int> want(ks.begin(), ks.end());
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    for (int k : want) check_k_M(k, M, "moment_constants");
    const int kmax = want.back();

    const auto sieve = mangoldt_sieve(M);
    std::vector<MomentEstimate> out;
    out.reserve(want.size());
    std::vector<double> cur(M + 1, 0.0), next;
    cur[1] = 1.0; // c_0
    size_t wi = 0;
    const auto pps = sieve.prime_powers();
    for (int k = 0; k <= kmax; ++k) {
        if (k == 1) cur = sieve.values, cur[1] = 0.0; // c_1 = Lambda, cheaper than a fold
        if (wi < want.size() && want[wi] == k) {
            MomentEstimate e;
            e.k = k;
            e.truncation = M;
            e.partial = k == 0 ? 1.0 : kernels::ops().sum_sq_ratio(cur.data(), 1, M + 1);
            e.tail_bound = moment_tail_bound(k, M);
            e.upper_bound_apriori = apriori_bound(k);
            out.push_back(e);
            ++wi;
        }
        if (k < kmax && k >= 1) {
            lambda_fold(pps, cur, next);
            cur.swap(next);
        }
    }
    return out;
}

MomentEstimate moment_constant(int k, uint64_t M) {
    const int one[1] = {k};
    return moment_constants(one, M)[0];
}

double carleman_partial_sum(int K, std::span<const MomentEstimate> estimates) {
    if (K < 1) throw std::invalid_argument("carleman_partial_sum: K must be >= 1");
    double s = 0.0;
    for (int k = 1; k <= K; ++k) {
        const MomentEstimate* e = nullptr;
        for (const auto& c : estimates)
            if (c.k == k) {
                e = &c;
                break;
            }
        if (e == nullptr)
            throw std::invalid_argument("carleman_partial_sum: estimates must cover k = 1.." +
                                        std::to_string(K));
        const double ub = e->partial + e->tail_bound;
        if (!(ub > 0.0) || !(e->partial >= 0.0))
            throw std::invalid_argument("carleman_partial_sum: estimate for k = " +
                                        std::to_string(k) + " has no positive upper bound");
        s += std::pow(ub, -1.0 / (2.0 * k));
    }
    return s;
}

std::string moments_json(std::span<const MomentEstimate> estimates) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : estimates) {
        nlohmann::ordered_json o;
        o["k"] = e.k;
        o["truncation"] = e.truncation;
        o["partial"] = fmt17(e.partial);
        o["tail_bound"] = fmt17(e.tail_bound);
        o["upper_bound_apriori"] = fmt17(e.upper_bound_apriori);
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

} // namespace llr
