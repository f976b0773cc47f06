#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace llr {

// Two-sided enclosure of the limiting 2k-th moment
//   M_k = sum_{m>=1} c_k(m)^2 / m^2,  c_k = k-fold Dirichlet power of Lambda:
// partial sums m <= truncation exactly; tail_bound is a rigorous upper bound
// for the remainder, so M_k lies in [partial, partial + tail_bound].
struct MomentEstimate {
    int k = 0;
    uint64_t truncation = 0;
    double partial = 0.0;
    double tail_bound = 0.0;
    double upper_bound_apriori = 0.0; // (2k)! + (k/e)^{2k}, the a-priori bound
};

// Tail via c_k(m) <= (log m)^k: sum_{m>M} (log m)^{2k}/m^2 <= the incomplete
// gamma Gamma(2k+1, log(M-1)) (substitution u = log t), plus the majorant's
// peak value (k/e)^{2k} once when the majorant still rises at M. k = 0 has no
// tail at all (c_0 lives on m = 1 only).
double moment_tail_bound(int k, uint64_t truncation);

MomentEstimate moment_constant(int k, uint64_t truncation);

// Shared-sieve batch: ks are deduplicated and sorted; one convolution ladder
// serves every requested k. Preconditions: 16 <= truncation, 0 <= k <= 20.
std::vector<MomentEstimate> moment_constants(std::span<const int> ks, uint64_t truncation);

// Lower bound for the Carleman sum sum_{k=1}^{K} M_k^{-1/(2k)} using the
// upper bounds partial + tail_bound; estimates must contain k = 1..K.
// Strictly increasing in K; its divergence as K grows is the determinacy
// certificate for the moment problem.
double carleman_partial_sum(int K, std::span<const MomentEstimate> estimates);

// JSON array; numeric fields are emitted as 17-significant-digit strings so
// files are byte-stable across platforms and JSON parsers.
std::string moments_json(std::span<const MomentEstimate> estimates);

} // namespace llr
