#include "llratio/characters.hpp"

#include "llratio/arith.hpp"
#include "llratio/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace llr {

CharacterTable build_table(int64_t q) {
    if (q < 3 || !is_odd_prime(static_cast<uint64_t>(q)))
        throw InvalidModulusError("build_table: q must be an odd prime, got " + std::to_string(q));
    CharacterTable t;
    t.q = q;
    t.g = primitive_root(static_cast<uint64_t>(q));
    const int64_t m = q - 1;
    t.dlog.assign(static_cast<size_t>(q), 0);
    uint64_t pw = 1;
    for (int64_t j = 0; j < m; ++j) {
        t.dlog[pw] = static_cast<uint32_t>(j);
        pw = pw * t.g % static_cast<uint64_t>(q);
    }
    // fill conjugate slots from the same cos/sin evaluation so that
    // roots[m-j] == conj(roots[j]) bitwise; m is even, roots[m/2] = -1 exactly
    t.roots.assign(static_cast<size_t>(m), std::complex<double>{1.0, 0.0});
    for (int64_t j = 1; j < m - j; ++j) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
        t.roots[j] = {std::cos(ang), std::sin(ang)};
        t.roots[m - j] = std::conj(t.roots[j]);
    }
    t.roots[m / 2] = {-1.0, 0.0};
    return t;
}

std::complex<double> CharacterTable::chi(int64_t b, int64_t n) const {
    const int64_t m = q - 1;
    if (b < 0 || b >= m) throw std::invalid_argument("chi: character index out of range");
    int64_t r = n % q;
    if (r < 0) r += q;
    if (r == 0) return {0.0, 0.0};
    const uint64_t j = static_cast<uint64_t>(b) * dlog[r] % static_cast<uint64_t>(m);
    return roots[j];
}

std::complex<double> orthogonality_sum(const CharacterTable& tab, uint64_t m, uint64_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("orthogonality_sum: m, n must be >= 1");
    const int64_t rm = static_cast<int64_t>(m % static_cast<uint64_t>(tab.q));
    const int64_t rn = static_cast<int64_t>(n % static_cast<uint64_t>(tab.q));
    std::complex<double> s{1.0, 0.0};
    for (int64_t b = 1; b <= tab.q - 2; ++b) s += tab.chi(b, rm) * std::conj(tab.chi(b, rn));
    return s;
}

} // namespace llr
