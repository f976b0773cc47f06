#pragma once

#include "llratio/lvalues.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace llr {

// Empirical distribution of the q-2 ratios |L'/L(1, chi_b)|, b = 1..q-2,
// sorted ascending (ties kept, broken by b for a stable order).
struct EmpiricalDistribution {
    int64_t q = 0;
    std::vector<double> ratios;
};

EmpiricalDistribution make_distribution(int64_t q, std::span<const LValueRecord> recs);

// D_q(t) = #{ratios <= t} / (q-2); right-continuous step function with mass
// in integer multiples of 1/(q-2).
double empirical_cdf(const EmpiricalDistribution& d, double t);

// (1/(q-2)) sum ratios^{2k}. Throws std::overflow_error when 2k*log(max)
// would overflow a double.
double empirical_moment(const EmpiricalDistribution& d, int k);

// Deviations |empirical 2k-th moment - reference| across several moduli and
// the least-squares slope of log(deviation) against log(q). A negative slope
// is the expected signature of convergence in the prime aspect. When every
// deviation vanishes (k = 0: both sides are exactly 1) exact_match is set and
// the slope is reported as 0.
struct ConvergenceReport {
    int k = 0;
    double reference = 0.0;
    bool exact_match = false;
    double slope = 0.0;
    std::vector<int64_t> qs;
    std::vector<double> moments;
    std::vector<double> deviations;
};

ConvergenceReport convergence_report(std::span<const EmpiricalDistribution> dists, int k,
                                     double reference);

// Upper-tail counts against the reference decay exp(-sqrt(t)/2): fraction(t)
// = #{ratios >= t}/(q-2), fitted_A = max fraction(t)/reference(t), so that
// fraction <= fitted_A * reference holds at every requested threshold.
struct TailReport {
    int64_t q = 0;
    std::vector<double> thresholds;
    std::vector<double> fractions;
    std::vector<double> references;
    double fitted_A = 0.0;
};

TailReport tail_report(const EmpiricalDistribution& d, std::span<const double> thresholds);

// CSV with one row per grid point t = start, start+step, ..., stop and one
// column D_<q> per distribution.
std::string figure_csv(std::span<const EmpiricalDistribution> dists, double start, double stop,
                       double step);

std::string tail_csv(const TailReport& r);

std::string convergence_json(std::span<const ConvergenceReport> reports);

} // namespace llr
