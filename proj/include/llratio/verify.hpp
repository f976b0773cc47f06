#pragma once

#include <iosfwd>
#include <string>

namespace llr {

struct VerifyResult {
    int checks = 0;
    int failures = 0;
};

// Runs a named self-check suite: "arith", "characters", "stieltjes",
// "lvalues", "moments", "distribution", or "all". Writes one JSON line per
// failed check plus a per-suite summary line to out. These are quick
// invariant batteries (seconds), not the full acceptance run.
VerifyResult run_suite(const std::string& name, std::ostream& out);

// Euler's constant and gamma_1(1) to double precision, for identity checks.
inline constexpr double kEulerGamma = 0.57721566490153286;
inline constexpr double kGamma1At1 = -0.072815845483676725;

} // namespace llr
