#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace llr {

uint64_t power_mod(uint64_t base, uint64_t exp, uint64_t mod);

// Deterministic Miller-Rabin, exact for all 64-bit inputs. Returns false for
// 2: every modulus in this library is odd.
bool is_odd_prime(uint64_t n);

// Smallest primitive root modulo an odd prime q.
uint64_t primitive_root(uint64_t q);

// Largest divisor of q coprime to n.
uint64_t coprime_part(uint64_t q, uint64_t n);

// von Mangoldt function on [1, limit]: values[m] = log p when m = p^a,
// 0 otherwise.
struct MangoldtSieve {
    uint64_t limit = 0;
    std::vector<double> values; // indexed by m, values[0] unused

    std::vector<std::pair<uint64_t, double>> prime_powers() const;
};

MangoldtSieve mangoldt_sieve(uint64_t limit);

// Same (p^a, log p) list as MangoldtSieve::prime_powers(), built without the
// dense values array. Preferred when limit is large and only the support of
// Lambda is needed.
std::vector<std::pair<uint64_t, double>> prime_power_list(uint64_t limit);

// k-fold Dirichlet self-convolution of Lambda:
//   c_0 = unit mass at m = 1,  c_{j+1}(m) = sum_{d | m} Lambda(d) c_j(m/d).
struct ConvolutionTable {
    int k = 0;
    uint64_t limit = 0;
    std::vector<double> values; // indexed by m, values[0] unused
};

// One convolution step: out[m] = sum over prime powers p^a <= m of
// log(p) * in[m / p^a] when p^a divides m. out is resized and zeroed.
void lambda_fold(const std::vector<std::pair<uint64_t, double>>& prime_powers,
                 const std::vector<double>& in, std::vector<double>& out);

ConvolutionTable lambda_convolution(int k, const MangoldtSieve& sieve);
ConvolutionTable lambda_convolution(int k, uint64_t limit);

} // namespace llr
