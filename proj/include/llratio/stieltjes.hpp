#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace llr {

namespace detail {

struct Eval {
    double value = 0.0;
    double err = 0.0; // certified absolute error bound
};

Eval digamma_eval(double x, int shift);
Eval gamma1_eval(double x, int shift);

} // namespace detail

// psi(x) for x > 0, Euler-Maclaurin after shifting the argument to y >= shift.
// With the default shift the truncation error is ~1e-21; the dominant error
// for small x is the rounding of the recurrence sum (~2 eps / x).
double digamma(double x, int shift = 32);

// First generalized Stieltjes constant gamma_1(x), the coefficient of
// (s-1) in the expansion zeta(s, x) = 1/(s-1) - psi(x) + gamma_1(x)(s-1) + ...
// up to the sign convention gamma_n(x) = (-1)^n/n! * that coefficient; here
// gamma_1(x) = lim_N [ sum_{k=0}^{N} ln(k+x)/(k+x) - ln^2(N+x)/2 ].
double gamma1_at(double x, int shift = 32);

// gamma_0(a/q) = -psi(a/q) and gamma_1(a/q) for a = 1..q-1, with a per-entry
// absolute error bound covering both columns.
struct StieltjesTable {
    int64_t q = 0;
    std::vector<double> gamma0;    // [a-1] for a = 1..q-1
    std::vector<double> gamma1;    // [a-1] for a = 1..q-1
    std::vector<double> err_bound; // [a-1]
};

StieltjesTable build_stieltjes_table(int64_t q, int shift = 32, int jobs = 0);

// CSV: header "a,gamma0,gamma1,err_bound" then one row per a.
std::string stieltjes_csv(const StieltjesTable& t);

} // namespace llr
