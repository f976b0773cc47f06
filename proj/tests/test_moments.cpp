#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "llratio/moments.hpp"
#include "llratio/summation.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <span>
#include <string>
#include <vector>

using namespace llr;

// value of the k = 1 mean at truncation 1e9, computed once from a segmented
// prime-power sieve and frozen here; the limit exceeds it by less than 5e-7
static constexpr double kMean1At1e9 = 0.80520979850539554;

// Lambda(m) by trial factorization, for the small hand-built partial sums
static double mangoldt_slow(uint64_t m) {
    if (m < 2) return 0.0;
    uint64_t p = 0;
    for (uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return std::log(static_cast<double>(m));
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(moment_constant(-1, 100), std::invalid_argument);
    CHECK_THROWS_AS(moment_constant(21, 100), std::invalid_argument);
    CHECK_THROWS_AS(moment_constant(1, 15), std::invalid_argument);
    CHECK_THROWS_AS(moment_tail_bound(1, 8), std::invalid_argument);
    CHECK_THROWS_AS(moment_constants(std::span<const int>{}, 100), std::invalid_argument);
}

TEST_CASE("k = 0 collapses to the unit mass at m = 1") {
    const auto e = moment_constant(0, 1000);
    CHECK(e.partial == 1.0);
    CHECK(e.tail_bound == 0.0);
    CHECK(e.upper_bound_apriori == 2.0);
}

TEST_CASE("tiny truncations agree with hand-built divisor sums") {
    const uint64_t M = 16;
    // k = 1: sum Lambda(m)^2 / m^2
    long double s1 = 0.0L;
    for (uint64_t m = 2; m <= M; ++m) {
        const long double L = mangoldt_slow(m);
        s1 += L * L / (static_cast<long double>(m) * m);
    }
    CHECK(moment_constant(1, M).partial ==
          doctest::Approx(static_cast<double>(s1)).epsilon(1e-14));
    // k = 2: sum (sum_{d|m} Lambda(d) Lambda(m/d))^2 / m^2
    long double s2 = 0.0L;
    for (uint64_t m = 2; m <= M; ++m) {
        long double c = 0.0L;
        for (uint64_t d = 1; d <= m; ++d)
            if (m % d == 0) c += static_cast<long double>(mangoldt_slow(d)) * mangoldt_slow(m / d);
        s2 += c * c / (static_cast<long double>(m) * m);
    }
    CHECK(moment_constant(2, M).partial ==
          doctest::Approx(static_cast<double>(s2)).epsilon(1e-14));
}

TEST_CASE("tail bound matches its incomplete gamma closed forms") {
    for (uint64_t M : {16ull, 100000ull, 10000000ull}) {
        const double u = std::log(static_cast<double>(M) - 1.0);
        const double g3 = std::exp(-u) * (u * u + 2.0 * u + 2.0);
        CHECK(moment_tail_bound(1, M) == doctest::Approx(g3).epsilon(1e-11));
        const double g5 =
            std::exp(-u) * (((u + 4.0) * u + 12.0) * u * u + 24.0 * u + 24.0);
        CHECK(moment_tail_bound(2, M) == doctest::Approx(g5).epsilon(1e-11));
    }
    CHECK(moment_tail_bound(0, 16) == 0.0);
}

TEST_CASE("tail bound keeps the majorant peak when truncating left of it") {
    // at M = 16 and k = 5 the summand (log m)^{10}/m^2 is still rising, so the
    // bound must exceed the peak value (5/e)^10 on top of the integral part
    const double peak = std::pow(5.0 / std::numbers::e, 10.0);
    CHECK(moment_tail_bound(5, 16) > peak);
    // the bound shrinks monotonically as the truncation moves right
    CHECK(moment_tail_bound(5, 16) > moment_tail_bound(5, 1000));
    CHECK(moment_tail_bound(5, 1000) > moment_tail_bound(5, 1000000));
    // and grows with k at fixed truncation
    CHECK(moment_tail_bound(1, 100000) < moment_tail_bound(2, 100000));
    CHECK(moment_tail_bound(2, 100000) < moment_tail_bound(3, 100000));
}

TEST_CASE("tail bound dominates the mass actually found further out") {
    const std::vector<int> ks{0, 1, 2, 3, 4, 5, 6};
    const auto lo = moment_constants(ks, 100000);
    const auto hi = moment_constants(ks, 400000);
    REQUIRE(lo.size() == 7);
    for (size_t i = 0; i < lo.size(); ++i) {
        CHECK(hi[i].partial >= lo[i].partial);                          // partial sums grow
        CHECK(hi[i].partial - lo[i].partial <= lo[i].tail_bound);       // growth within bound
        CHECK(hi[i].partial + hi[i].tail_bound <=
              lo[i].partial + lo[i].tail_bound + 1e-12);                // enclosures nest
        CHECK(hi[i].partial + hi[i].tail_bound <=
              hi[i].upper_bound_apriori * (1.0 + 1e-6));                   // a-priori cap
    }
}

TEST_CASE("k = 1 enclosures contain the frozen high-precision value") {
    for (uint64_t M : {1000000ull, 10000000ull}) {
        const auto e = moment_constant(1, M);
        CHECK(e.partial <= kMean1At1e9);
        CHECK(e.partial + e.tail_bound >= kMean1At1e9);
    }
    const auto e7 = moment_constant(1, 10000000);
    CHECK(e7.tail_bound < 5e-5); // the enclosure is tight at 1e7
}

TEST_CASE("recomputation at a larger truncation stays inside the enclosure") {
    const auto e7 = moment_constant(1, 10000000);
    const auto e8 = moment_constant(1, 100000000);
    CHECK(e8.partial >= e7.partial);
    CHECK(e8.partial <= e7.partial + e7.tail_bound);
    CHECK(e8.partial <= kMean1At1e9);
    CHECK(kMean1At1e9 - e8.partial <= e8.tail_bound);
}

TEST_CASE("a-priori bound for k = 1 equals 2 + exp(-2)") {
    const auto e = moment_constant(1, 16);
    CHECK(e.upper_bound_apriori == doctest::Approx(2.0 + std::exp(-2.0)).epsilon(1e-15));
}

TEST_CASE("batch and single entry points produce identical estimates") {
    const std::vector<int> ks{3, 1, 1};
    const auto batch = moment_constants(ks, 50000);
    REQUIRE(batch.size() == 2); // deduplicated and sorted
    CHECK(batch[0].k == 1);
    CHECK(batch[1].k == 3);
    const auto single1 = moment_constant(1, 50000);
    const auto single3 = moment_constant(3, 50000);
    CHECK(batch[0].partial == single1.partial);
    CHECK(batch[1].partial == single3.partial);
    CHECK(batch[0].tail_bound == single1.tail_bound);
    CHECK(batch[1].tail_bound == single3.tail_bound);
}

TEST_CASE("carleman partial sums increase without bound markers") {
    std::vector<int> ks;
    for (int k = 1; k <= 20; ++k) ks.push_back(k);
    const auto est = moment_constants(ks, uint64_t{1} << 21);
    double prev = 0.0;
    for (int K = 1; K <= 20; ++K) {
        const double s = carleman_partial_sum(K, est);
        CHECK(s > prev); // strictly increasing: every new term is positive
        prev = s;
    }
    // each term is at least the Stirling-type floor 0.5 e / (2k + 1) for the
    // first few k, which is what makes the series diverge like log K
    double floor_sum = 0.0;
    for (int k = 1; k <= 6; ++k) floor_sum += 0.5 * std::numbers::e / (2.0 * k + 1.0);
    CHECK(carleman_partial_sum(6, est) > floor_sum);
    CHECK_THROWS_AS(carleman_partial_sum(0, est), std::invalid_argument);
    const auto only3 = moment_constant(3, 1 << 16);
    const MomentEstimate arr[1] = {only3};
    CHECK_THROWS_AS(carleman_partial_sum(3, arr), std::invalid_argument);
}

TEST_CASE("json report round-trips every number through 17 digits") {
    const std::vector<int> ks{0, 1, 2};
    const auto est = moment_constants(ks, 100000);
    const std::string text = moments_json(est);
    const auto parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 3);
    for (size_t i = 0; i < est.size(); ++i) {
        CHECK(parsed[i]["k"].get<int>() == est[i].k);
        CHECK(parsed[i]["truncation"].get<uint64_t>() == est[i].truncation);
        CHECK(std::strtod(parsed[i]["partial"].get<std::string>().c_str(), nullptr) ==
              est[i].partial);
        CHECK(std::strtod(parsed[i]["tail_bound"].get<std::string>().c_str(), nullptr) ==
              est[i].tail_bound);
        CHECK(std::strtod(parsed[i]["upper_bound_apriori"].get<std::string>().c_str(), nullptr) ==
              est[i].upper_bound_apriori);
    }
}
