#pragma once

#include <cmath>

namespace llr {

// Neumaier's variant of compensated summation: like Kahan's, but the
// correction also survives when an incoming term is larger than the running
// sum. The result is accurate to ~1 ulp of the true sum even for series with
// heavy cancellation or terms spanning many orders of magnitude.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

} // namespace llr
