#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace llr {

// Index of a Dirichlet character mod an odd prime q under a fixed primitive
// root g: chi_b(g^j) = e^{2 pi i b j / (q-1)}. b = 0 is principal, b and
// q-1-b are complex conjugates, and chi_b(-1) = (-1)^b.
struct CharacterIndex {
    int64_t b = 0;

    int64_t conjugate(int64_t q) const { return (q - 1 - b) % (q - 1); }
    int parity() const { return b % 2 == 0 ? +1 : -1; }
};

struct CharacterTable {
    int64_t q = 0;
    uint64_t g = 0;                           // smallest primitive root mod q
    std::vector<uint32_t> dlog;               // n = g^dlog[n] mod q for n in [1, q-1]
    std::vector<std::complex<double>> roots;  // roots[j] = e^{2 pi i j/(q-1)}

    int64_t order() const { return q - 1; }

    // chi_b(n); zero when q | n. Any integer n is accepted (reduced mod q).
    std::complex<double> chi(int64_t b, int64_t n) const;
};

// The roots table is filled symmetrically so that roots[q-1-j] is the bitwise
// conjugate of roots[j]; chi(q-1-b, n) == conj(chi(b, n)) holds exactly.
CharacterTable build_table(int64_t q);

// Left side of the finite orthogonality identity:
//   1 + sum_{b=1}^{q-2} chi_b(m) conj(chi_b(n)).
std::complex<double> orthogonality_sum(const CharacterTable& tab, uint64_t m, uint64_t n);

} // namespace llr
