#include "llratio/stieltjes.hpp"

#include "llratio/arith.hpp"
#include "llratio/errors.hpp"
#include "llratio/io_util.hpp"
#include "llratio/parallel.hpp"
#include "llratio/summation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace llr {

namespace {

// Bernoulli numbers B_2..B_12 and odd harmonic numbers H_1, H_3, ..., H_11
// for the Euler-Maclaurin corrections below.
constexpr double kB2j[6] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
constexpr double kHodd[6] = {1.0, 11.0 / 6, 137.0 / 60, 363.0 / 140, 7129.0 / 2520, 83711.0 / 27720};
constexpr double kEps = 2.220446049250313e-16;

void check_args(double x, int shift, const char* who) {
    if (!(x > 0.0)) throw std::domain_error(std::string(who) + ": requires x > 0");
    if (shift < 8 || shift > 4096) throw std::invalid_argument(std::string(who) + ": shift out of range");
}

} // namespace

namespace detail {

// psi(x) = -sum_{k=0}^{N-1} 1/(x+k) + ln y - 1/(2y) - sum_j B_{2j}/(2j y^{2j}),
// y = x + N chosen so y >= shift. Truncating the asymptotic series after B_12
// leaves less than |B_14|/(14 y^14); 4x that is used as a lazily safe bound.
// The returned err also carries 2 eps * (sum of |terms|) for accumulated
// rounding, which dominates for small x.
Eval digamma_eval(double x, int shift) {
    check_args(x, shift, "digamma");
    NeumaierSum s;
    double abs_acc = 0.0;
    double t = x;
    while (t < shift) {
        s.add(-1.0 / t);
        abs_acc += 1.0 / t;
        t += 1.0;
    }
    const double y = t;
    const double ly = std::log(y);
    s.add(ly);
    s.add(-0.5 / y);
    abs_acc += ly + 0.5 / y;
    const double y2 = y * y;
    double ypow = y2;
    for (int j = 0; j < 6; ++j) {
        s.add(-kB2j[j] / (2.0 * (j + 1) * ypow));
        ypow *= y2;
    }
    const double em_tail = 4.0 / 12.0 / std::pow(y, 14.0);
    return {s.value(), em_tail + 2.0 * kEps * abs_acc};
}

// Euler-Maclaurin for f(t) = ln(t+x)/(t+x), using
//   (d/dy)^n (ln y / y) = (-1)^n n! (ln y - H_n) / y^{n+1}:
// gamma_1(x) = sum_{k=0}^{N-1} f(k) - ln^2(y)/2 + ln(y)/(2y)
//              + sum_j B_{2j} (ln y - H_{2j-1}) / (2j y^{2j}),  y = x + N.
// First omitted term is B_14 (ln y - H_13)/(14 y^14); 4x(ln y + H_13) bounds it.
Eval gamma1_eval(double x, int shift) {
    check_args(x, shift, "gamma1_at");
    NeumaierSum s;
    double abs_acc = 0.0;
    double t = x;
    while (t < shift) {
        const double f = std::log(t) / t;
        s.add(f);
        abs_acc += std::abs(f);
        t += 1.0;
    }
    const double y = t;
    const double ly = std::log(y);
    s.add(-0.5 * ly * ly);
    s.add(0.5 * ly / y);
    abs_acc += 0.5 * ly * ly + 0.5 * ly / y;
    const double y2 = y * y;
    double ypow = y2;
    for (int j = 0; j < 6; ++j) {
        s.add(kB2j[j] * (ly - kHodd[j]) / (2.0 * (j + 1) * ypow));
        ypow *= y2;
    }
    const double em_tail = 4.0 * (7.0 / 6.0) * (ly + 3.2) / (14.0 * std::pow(y, 14.0));
    return {s.value(), em_tail + 2.0 * kEps * abs_acc};
}

} // namespace detail

double digamma(double x, int shift) { return detail::digamma_eval(x, shift).value; }

double gamma1_at(double x, int shift) { return detail::gamma1_eval(x, shift).value; }

StieltjesTable build_stieltjes_table(int64_t q, int shift, int jobs) {
    if (q < 3 || !is_odd_prime(static_cast<uint64_t>(q)))
        throw InvalidModulusError("build_stieltjes_table: q must be an odd prime, got " + std::to_string(q));
    StieltjesTable t;
    t.q = q;
    t.gamma0.assign(static_cast<size_t>(q - 1), 0.0);
    t.gamma1.assign(static_cast<size_t>(q - 1), 0.0);
    t.err_bound.assign(static_cast<size_t>(q - 1), 0.0);
    parallel_for(1, q, jobs, [&](int64_t a) {
        const double x = static_cast<double>(a) / static_cast<double>(q);
        const auto e0 = detail::digamma_eval(x, shift);
        const auto e1 = detail::gamma1_eval(x, shift);
        t.gamma0[a - 1] = -e0.value;
        t.gamma1[a - 1] = e1.value;
        t.err_bound[a - 1] = std::max(e0.err, e1.err);
    });
    return t;
}

std::string stieltjes_csv(const StieltjesTable& t) {
    std::string out = "a,gamma0,gamma1,err_bound\n";
    for (int64_t a = 1; a < t.q; ++a) {
        out += std::to_string(a);
        out += ',';
        out += fmt17(t.gamma0[a - 1]);
        out += ',';
        out += fmt17(t.gamma1[a - 1]);
        out += ',';
        out += fmt17(t.err_bound[a - 1]);
        out += '\n';
    }
    return out;
}

} // namespace llr
