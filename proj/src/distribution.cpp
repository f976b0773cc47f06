#include "llratio/distribution.hpp"

#include "llratio/io_util.hpp"
#include "llratio/summation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace llr {

EmpiricalDistribution make_distribution(int64_t q, std::span<const LValueRecord> recs) {
    if (recs.size() != static_cast<size_t>(q - 2))
        throw std::invalid_argument("make_distribution: expected q-2 records");
    std::vector<std::pair<double, int64_t>> keyed;
    keyed.reserve(recs.size());
    for (const auto& r : recs) keyed.emplace_back(r.ratio, r.b);
    std::sort(keyed.begin(), keyed.end());
    EmpiricalDistribution d;
    d.q = q;
    d.ratios.reserve(keyed.size());
    for (const auto& [v, b] : keyed) d.ratios.push_back(v);
    return d;
}

double empirical_cdf(const EmpiricalDistribution& d, double t) {
    if (d.ratios.empty()) throw std::invalid_argument("empirical_cdf: empty distribution");
    const auto it = std::upper_bound(d.ratios.begin(), d.ratios.end(), t);
    return static_cast<double>(it - d.ratios.begin()) / static_cast<double>(d.ratios.size());
}

double empirical_moment(const EmpiricalDistribution& d, int k) {
    if (d.ratios.empty()) throw std::invalid_argument("empirical_moment: empty distribution");
    if (k < 0 || k > 20) throw std::invalid_argument("empirical_moment: k must be in [0, 20]");
    if (k == 0) return 1.0;
    const double rmax = d.ratios.back();
    if (rmax > 0.0 && 2.0 * k * std::log(rmax) > 700.0)
        throw std::overflow_error("empirical_moment: ratios too large for 2k-th power");
    NeumaierSum s;
    for (double r : d.ratios) s.add(std::pow(r, 2.0 * k));
    return s.value() / static_cast<double>(d.ratios.size());
}

ConvergenceReport convergence_report(std::span<const EmpiricalDistribution> dists, int k,
                                  double reference) {
    if (dists.size() < 3)
        throw std::invalid_argument("convergence_report: need at least 3 moduli for a slope");
    for (size_t i = 1; i < dists.size(); ++i)
        if (dists[i].q <= dists[i - 1].q)
            throw std::invalid_argument("convergence_report: moduli must be strictly increasing");
    ConvergenceReport rep;
    rep.k = k;
    rep.reference = reference;
    for (const auto& d : dists) {
        rep.qs.push_back(d.q);
        rep.moments.push_back(empirical_moment(d, k));
        rep.deviations.push_back(std::abs(rep.moments.back() - reference));
    }
    rep.exact_match = std::all_of(rep.deviations.begin(), rep.deviations.end(),
                                  [](double d) { return d < 1e-15; });
    if (rep.exact_match) {
        rep.slope = 0.0;
        return rep;
    }
    // least squares of log(deviation) on log(q); zero deviations would mean a
    // mix of exact and inexact moduli, which no real input produces
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(dists.size());
    for (size_t i = 0; i < dists.size(); ++i) {
        if (rep.deviations[i] <= 0.0)
            throw std::domain_error("convergence_report: zero deviation in log-log fit");
        const double x = std::log(static_cast<double>(rep.qs[i]));
        const double y = std::log(rep.deviations[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return rep;
}

TailReport tail_report(const EmpiricalDistribution& d, std::span<const double> thresholds) {
    if (d.ratios.empty()) throw std::invalid_argument("tail_report: empty distribution");
    if (thresholds.empty()) throw std::invalid_argument("tail_report: no thresholds");
    for (size_t i = 0; i < thresholds.size(); ++i) {
        if (thresholds[i] < 0.0) throw std::invalid_argument("tail_report: thresholds must be >= 0");
        if (i > 0 && thresholds[i] <= thresholds[i - 1])
            throw std::invalid_argument("tail_report: thresholds must be strictly increasing");
    }
    TailReport r;
    r.q = d.q;
    const double n = static_cast<double>(d.ratios.size());
    for (double t : thresholds) {
        const auto it = std::lower_bound(d.ratios.begin(), d.ratios.end(), t);
        const double frac = static_cast<double>(d.ratios.end() - it) / n;
        const double ref = std::exp(-std::sqrt(t) / 2.0);
        r.thresholds.push_back(t);
        r.fractions.push_back(frac);
        r.references.push_back(ref);
        r.fitted_A = std::max(r.fitted_A, frac / ref);
    }
    return r;
}

std::string figure_csv(std::span<const EmpiricalDistribution> dists, double start, double stop,
                       double step) {
    if (dists.empty()) throw std::invalid_argument("figure_csv: no distributions");
    if (!(step > 0.0) || stop < start) throw std::invalid_argument("figure_csv: bad grid");
    std::string out = "t";
    for (const auto& d : dists) {
        out += ",D_";
        out += std::to_string(d.q);
    }
    out += '\n';
    const int64_t rows = static_cast<int64_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (int64_t i = 0; i < rows; ++i) {
        const double t = start + static_cast<double>(i) * step;
        out += fmt17(t);
        for (const auto& d : dists) {
            out += ',';
            out += fmt17(empirical_cdf(d, t));
        }
        out += '\n';
    }
    return out;
}

std::string tail_csv(const TailReport& r) {
    std::string out = "t,fraction,reference\n";
    for (size_t i = 0; i < r.thresholds.size(); ++i) {
        out += fmt17(r.thresholds[i]);
        out += ',';
        out += fmt17(r.fractions[i]);
        out += ',';
        out += fmt17(r.references[i]);
        out += '\n';
    }
    return out;
}

std::string convergence_json(std::span<const ConvergenceReport> reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        nlohmann::ordered_json o;
        o["k"] = rep.k;
        o["reference"] = fmt17(rep.reference);
        o["exact_match"] = rep.exact_match;
        o["slope"] = fmt17(rep.slope);
        o["q"] = rep.qs;
        nlohmann::ordered_json moms = nlohmann::ordered_json::array();
        nlohmann::ordered_json devs = nlohmann::ordered_json::array();
        for (double m : rep.moments) moms.push_back(fmt17(m));
        for (double d : rep.deviations) devs.push_back(fmt17(d));
        o["empirical_moments"] = std::move(moms);
        o["deviations"] = std::move(devs);
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

} // namespace llr
