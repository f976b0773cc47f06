#include "llratio/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace llr {

static uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t power_mod(uint64_t base, uint64_t exp, uint64_t mod) {
    if (mod == 0) throw std::invalid_argument("power_mod: zero modulus");
    uint64_t r = 1 % mod;
    base %= mod;
    while (exp != 0) {
        if (exp & 1) r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

bool is_odd_prime(uint64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++s;
    }
    // this witness set decides primality for every n < 2^64
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = power_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t primitive_root(uint64_t q) {
    if (!is_odd_prime(q)) throw std::invalid_argument("primitive_root: modulus must be an odd prime");
    std::vector<uint64_t> factors;
    uint64_t n = q - 1;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            factors.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) factors.push_back(n);
    for (uint64_t g = 2; g < q; ++g) {
        bool generator = true;
        for (uint64_t r : factors) {
            if (power_mod(g, (q - 1) / r, q) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    throw std::logic_error("primitive_root: no generator found"); // unreachable for prime q
}

uint64_t coprime_part(uint64_t q, uint64_t n) {
    if (q == 0 || n == 0) throw std::invalid_argument("coprime_part: arguments must be positive");
    for (uint64_t g = std::gcd(q, n); g > 1; g = std::gcd(q, n)) q /= g;
    return q;
}

// ---- sieves ----------------------------------------------------------------

MangoldtSieve mangoldt_sieve(uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("mangoldt_sieve: limit must be >= 1");
    MangoldtSieve s;
    s.limit = limit;
    s.values.assign(limit + 1, 0.0);
    std::vector<bool> composite(limit + 1, false);
    for (uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        if (p <= limit / p)
            for (uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
        const double lp = std::log(static_cast<double>(p));
        uint64_t pe = p;
        for (;;) {
            s.values[pe] = lp;
            if (pe > limit / p) break;
            pe *= p;
        }
    }
    return s;
}

std::vector<std::pair<uint64_t, double>> MangoldtSieve::prime_powers() const {
    std::vector<std::pair<uint64_t, double>> out;
    for (uint64_t m = 2; m <= limit; ++m)
        if (values[m] != 0.0) out.emplace_back(m, values[m]);
    return out;
}

std::vector<std::pair<uint64_t, double>> prime_power_list(uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("prime_power_list: limit must be >= 1");
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::pair<uint64_t, double>> out;
    for (uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        if (p <= limit / p)
            for (uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
        const double lp = std::log(static_cast<double>(p));
        uint64_t pe = p;
        for (;;) {
            out.emplace_back(pe, lp);
            if (pe > limit / p) break;
            pe *= p;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- Lambda convolutions ----------------------------------------------------

void lambda_fold(const std::vector<std::pair<uint64_t, double>>& prime_powers,
                 const std::vector<double>& in, std::vector<double>& out) {
    const uint64_t M = in.size() - 1;
    out.assign(in.size(), 0.0);
    const double* c = in.data();
    double* o = out.data();
    for (const auto& [pp, lp] : prime_powers) {
        if (pp > M) break;
        const uint64_t tmax = M / pp;
        for (uint64_t t = 1; t <= tmax; ++t)
            if (c[t] != 0.0) o[pp * t] += lp * c[t];
    }
}

ConvolutionTable lambda_convolution(int k, const MangoldtSieve& sieve) {
    if (k < 0) throw std::invalid_argument("lambda_convolution: k must be >= 0");
    ConvolutionTable t;
    t.k = k;
    t.limit = sieve.limit;
    t.values.assign(sieve.limit + 1, 0.0);
    t.values[1] = 1.0;
    if (k == 0) return t;
    if (k == 1) {
        t.values = sieve.values;
        return t;
    }
    const auto pps = sieve.prime_powers();
    std::vector<double> cur = sieve.values, next;
    for (int j = 1; j < k; ++j) {
        lambda_fold(pps, cur, next);
        cur.swap(next);
    }
    t.values = std::move(cur);
    return t;
}

ConvolutionTable lambda_convolution(int k, uint64_t limit) {
    return lambda_convolution(k, mangoldt_sieve(limit));
}

} // namespace llr
