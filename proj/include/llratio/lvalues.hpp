#pragma once

#include "llratio/characters.hpp"
#include "llratio/stieltjes.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace llr {

// L(1, chi_b), L'(1, chi_b) and ratio = |L'(1)/L(1)| for one non-principal
// character. Records for b and q-1-b are exact complex conjugates with
// bitwise-equal ratios.
struct LValueRecord {
    int64_t b = 0;
    std::complex<double> L1;
    std::complex<double> Lp1;
    double ratio = 0.0;
};

enum class SumPath {
    batched, // one DFT over the discrete-log reindexing covers all b at once
    direct   // per-character O(q) sums in ascending a, compensated
};

// All non-principal characters, b = 1..q-2, from the Hurwitz expansion of
// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q) at s = 1:
//   L(1)  = (1/q) sum_a chi_b(a) gamma_0(a/q)
//   L'(1) = -(1/q) sum_a chi_b(a) gamma_1(a/q) - log(q) L(1).
// Throws ToleranceError if any |L(1)| falls below 1e-8 (none does for an odd
// prime modulus; the guard protects the ratio from a meaningless division).
std::vector<LValueRecord> l_values_all(const CharacterTable& tab, const StieltjesTable& st,
                                       SumPath path = SumPath::batched, int jobs = 0);

// Smoothed prime-power series sum_n chi_b(n) Lambda(n) e^{-n/X} / n, which
// converges to -L'/L(1, chi_b) as X grows (error roughly X^{-1/2} scaled by
// the lowest zeta zeros of the character). Independent of the Stieltjes
// machinery; used as a cross-check oracle. Terms run up to n = X * log(1e16).
// out[b] for b = 1..q-2; out[0] is zero.
std::vector<std::complex<double>> ratio_oracle_smoothed_all(const CharacterTable& tab, double X,
                                                            int jobs = 0);

std::complex<double> ratio_oracle_smoothed(const CharacterTable& tab, int64_t b, double X);

// CSV: header "q,b,re_L1,im_L1,re_Lp1,im_Lp1,ratio", rows in ascending b.
std::string l_values_csv(int64_t q, const std::vector<LValueRecord>& recs);

} // namespace llr
