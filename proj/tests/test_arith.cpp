#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "llratio/arith.hpp"
#include "llratio/summation.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

using namespace llr;

// ---- oracles ---------------------------------------------------------------

// multiplicative order of g mod q by direct powering
static bool generates_full_group(uint64_t g, uint64_t q) {
    uint64_t x = 1;
    for (uint64_t e = 1; e < q - 1; ++e) {
        x = x * g % q;
        if (x == 1) return false;
    }
    return x * g % q == 1;
}

// Lambda by trial factorization
static double mangoldt_bruteforce(uint64_t m) {
    if (m < 2) return 0.0;
    uint64_t p = 0;
    for (uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return std::log(static_cast<double>(m)); // m prime
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

// k-fold Dirichlet power by repeated full divisor-pair convolution
static std::vector<double> conv_power_bruteforce(int k, uint64_t n) {
    std::vector<double> lam(n + 1, 0.0);
    for (uint64_t m = 1; m <= n; ++m) lam[m] = mangoldt_bruteforce(m);
    std::vector<double> c(n + 1, 0.0);
    c[1] = 1.0;
    for (int rep = 0; rep < k; ++rep) {
        std::vector<double> next(n + 1, 0.0);
        for (uint64_t a = 1; a <= n; ++a)
            if (c[a] != 0.0)
                for (uint64_t b = 1; a * b <= n; ++b) next[a * b] += c[a] * lam[b];
        c = std::move(next);
    }
    return c;
}

// ---- tests -----------------------------------------------------------------

TEST_CASE("power_mod basics") {
    CHECK(power_mod(2, 10, 1000) == 24);
    CHECK(power_mod(7, 0, 13) == 1);
    CHECK(power_mod(0, 5, 13) == 0);
    CHECK(power_mod(3, 1000000007, 998244353) == 459704916); // cross-checked by squaring chain below
    // independent check: repeated squaring in __int128 without the helper
    unsigned __int128 acc = 1, base = 3;
    uint64_t e = 1000000007;
    while (e) {
        if (e & 1) acc = acc * base % 998244353;
        base = base * base % 998244353;
        e >>= 1;
    }
    CHECK(power_mod(3, 1000000007, 998244353) == static_cast<uint64_t>(acc));
    CHECK_THROWS_AS(power_mod(2, 2, 0), std::invalid_argument);
}

TEST_CASE("is_odd_prime classifies correctly") {
    CHECK_FALSE(is_odd_prime(0));
    CHECK_FALSE(is_odd_prime(1));
    CHECK_FALSE(is_odd_prime(2)); // odd primes only by contract
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(5));
    CHECK(is_odd_prime(59));
    CHECK(is_odd_prime(101));
    CHECK(is_odd_prime(257));
    CHECK(is_odd_prime(4001));
    CHECK_FALSE(is_odd_prime(9));
    CHECK_FALSE(is_odd_prime(91));       // 7 * 13
    CHECK_FALSE(is_odd_prime(3215031751ull)); // strong pseudoprime to bases 2,3,5,7
    CHECK(is_odd_prime((1ull << 61) - 1));    // Mersenne prime
    // exhaustive against trial division on a small range
    for (uint64_t n = 0; n <= 2000; ++n) {
        bool prime = n >= 2;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) prime = false;
        CHECK(is_odd_prime(n) == (prime && n % 2 == 1));
    }
}

TEST_CASE("primitive_root returns the smallest generator") {
    CHECK(primitive_root(3) == 2);
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(41) == 6); // smallest root not 2,3,5
    for (uint64_t q : {3ull, 5ull, 7ull, 11ull, 13ull, 101ull, 257ull, 4001ull}) {
        const uint64_t g = primitive_root(q);
        CHECK(generates_full_group(g, q));
        for (uint64_t h = 2; h < g; ++h) CHECK_FALSE(generates_full_group(h, q));
    }
    CHECK_THROWS_AS(primitive_root(8), std::invalid_argument);
    CHECK_THROWS_AS(primitive_root(2), std::invalid_argument);
}

TEST_CASE("coprime_part strips exactly the shared primes") {
    CHECK(coprime_part(354, 59) == 6);   // 2*3*59 -> 2*3
    CHECK(coprime_part(59, 60) == 59);
    CHECK(coprime_part(8, 2) == 1);
    CHECK(coprime_part(1, 7) == 1);
    CHECK(coprime_part(45, 15) == 1);
    CHECK_THROWS_AS(coprime_part(0, 3), std::invalid_argument);
    // property: result divides q, is coprime to n, and q/result has only primes of n
    for (uint64_t q = 1; q <= 60; ++q)
        for (uint64_t n = 1; n <= 60; ++n) {
            const uint64_t c = coprime_part(q, n);
            CHECK(q % c == 0);
            CHECK(std::gcd(c, n) == 1);
            uint64_t rest = q / c;
            for (uint64_t d = 2; d <= rest; ++d)
                while (rest % d == 0) {
                    CHECK(n % d == 0);
                    rest /= d;
                }
        }
}

TEST_CASE("mangoldt_sieve matches trial factorization") {
    const auto s = mangoldt_sieve(512);
    REQUIRE(s.values.size() == 513);
    for (uint64_t m = 1; m <= 512; ++m)
        CHECK(s.values[m] == doctest::Approx(mangoldt_bruteforce(m)).epsilon(1e-15));
    CHECK(s.values[8] == doctest::Approx(std::log(2.0)));
    CHECK(s.values[9] == doctest::Approx(std::log(3.0)));
    CHECK(s.values[12] == 0.0);
    CHECK_THROWS_AS(mangoldt_sieve(0), std::invalid_argument);
}

TEST_CASE("prime power enumeration is consistent between builders") {
    const auto s = mangoldt_sieve(10000);
    const auto a = s.prime_powers();
    const auto b = prime_power_list(10000);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].first == b[i].first);
        CHECK(a[i].second == b[i].second);
    }
}

TEST_CASE("chebyshev bound: psi(x) stays near x") {
    const auto s = mangoldt_sieve(100000);
    NeumaierSum psi;
    for (uint64_t m = 2; m <= 100000; ++m) psi.add(s.values[m]);
    CHECK(std::abs(psi.value() - 100000.0) < 1500.0);
}

TEST_CASE("lambda_convolution equals the divisor-pair brute force") {
    const uint64_t n = 2000;
    const auto sieve = mangoldt_sieve(n);
    for (int k = 0; k <= 4; ++k) {
        const auto fast = lambda_convolution(k, sieve);
        const auto slow = conv_power_bruteforce(k, n);
        REQUIRE(fast.values.size() == slow.size());
        for (uint64_t m = 1; m <= n; ++m)
            CHECK(fast.values[m] == doctest::Approx(slow[m]).epsilon(1e-12));
    }
}

TEST_CASE("convolution identities at small arguments") {
    const auto c2 = lambda_convolution(2, 64);
    CHECK(c2.values[1] == 0.0);
    CHECK(c2.values[2] == 0.0);                                        // needs two factors
    CHECK(c2.values[4] == doctest::Approx(std::log(2.0) * std::log(2.0)));
    CHECK(c2.values[6] == doctest::Approx(2.0 * std::log(2.0) * std::log(3.0)));
    CHECK(c2.values[8] == doctest::Approx(2.0 * std::log(2.0) * std::log(2.0))); // 2*4 and 4*2
    CHECK(c2.values[12] == doctest::Approx(2.0 * std::log(2.0) * std::log(3.0))); // 3*4, 4*3 only
    const auto c0 = lambda_convolution(0, 64);
    CHECK(c0.values[1] == 1.0);
    for (uint64_t m = 2; m <= 64; ++m) CHECK(c0.values[m] == 0.0);
    const auto c1 = lambda_convolution(1, 64);
    const auto lam = mangoldt_sieve(64);
    for (uint64_t m = 1; m <= 64; ++m) CHECK(c1.values[m] == lam.values[m]);
}

TEST_CASE("log-power majorant caps every convolution value") {
    const uint64_t n = 100000;
    const auto sieve = mangoldt_sieve(n);
    for (int k = 1; k <= 4; ++k) {
        const auto c = lambda_convolution(k, sieve);
        for (uint64_t m = 2; m <= n; ++m) {
            const double cap = std::pow(std::log(static_cast<double>(m)), k);
            CHECK(c.values[m] <= cap + 1e-12);
        }
    }
}
