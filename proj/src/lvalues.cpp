#include "llratio/lvalues.hpp"

#include "llratio/arith.hpp"
#include "llratio/dft.hpp"
#include "llratio/errors.hpp"
#include "llratio/io_util.hpp"
#include "llratio/parallel.hpp"
#include "llratio/summation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace llr {

using cplx = std::complex<double>;

namespace {

// The character sums S_w(b) = sum_{a=1}^{q-1} chi_b(a) w(a) become one DFT
// after reindexing by the discrete log: with a = g^j,
//   S_w(b) = sum_{j=0}^{q-2} w(g^j) e^{2 pi i b j/(q-1)}.
std::vector<cplx> batched_sums(const CharacterTable& tab, const std::vector<double>& w) {
    const int64_t m = tab.q - 1;
    std::vector<double> v(static_cast<size_t>(m));
    uint64_t pw = 1;
    for (int64_t j = 0; j < m; ++j) {
        v[j] = w[pw - 1];
        pw = pw * tab.g % static_cast<uint64_t>(tab.q);
    }
    return dft::dft_real(v, +1);
}

} // namespace

std::vector<LValueRecord> l_values_all(const CharacterTable& tab, const StieltjesTable& st,
                                       SumPath path, int jobs) {
    const int64_t q = tab.q;
    if (st.q != q) throw std::invalid_argument("l_values_all: tables disagree on q");
    const int64_t m = q - 1;
    const double lq = std::log(static_cast<double>(q));
    const double inv_q = 1.0 / static_cast<double>(q);
    std::vector<LValueRecord> recs(static_cast<size_t>(q - 2));

    auto finish = [&](int64_t b, cplx s0, cplx s1) {
        LValueRecord r;
        r.b = b;
        r.L1 = s0 * inv_q;
        r.Lp1 = -s1 * inv_q - lq * r.L1;
        const double a1 = std::abs(r.L1);
        if (a1 < 1e-8)
            throw ToleranceError("l_values_all: |L(1)| below 1e-8 at q=" + std::to_string(q) +
                                 " b=" + std::to_string(b));
        r.ratio = std::abs(r.Lp1) / a1;
        return r;
    };

    auto direct_record = [&](int64_t b) {
        NeumaierSum re0, im0, re1, im1;
        for (int64_t a = 1; a <= q - 1; ++a) {
            const cplx c = tab.chi(b, a);
            re0.add(c.real() * st.gamma0[a - 1]);
            im0.add(c.imag() * st.gamma0[a - 1]);
            re1.add(c.real() * st.gamma1[a - 1]);
            im1.add(c.imag() * st.gamma1[a - 1]);
        }
        return finish(b, {re0.value(), im0.value()}, {re1.value(), im1.value()});
    };

    if (path == SumPath::batched) {
        const auto s0 = batched_sums(tab, st.gamma0);
        const auto s1 = batched_sums(tab, st.gamma1);
        // lower half from the transform, upper half mirrored so conjugate
        // pairs are exact (and ratios bitwise equal)
        for (int64_t b = 1; b < m / 2; ++b) {
            const LValueRecord r = finish(b, s0[b], s1[b]);
            recs[b - 1] = r;
            const int64_t bc = CharacterIndex{b}.conjugate(q);
            LValueRecord rc;
            rc.b = bc;
            rc.L1 = std::conj(r.L1);
            rc.Lp1 = std::conj(r.Lp1);
            rc.ratio = r.ratio;
            recs[bc - 1] = rc;
        }
        // the self-conjugate index is the real quadratic character; its chi
        // values are exactly +-1, so the per-character sum is computed
        // directly and carries an exactly zero imaginary part (the transform
        // would leave O(eps) dust there and break the pairing invariant)
        recs[m / 2 - 1] = direct_record(m / 2);
    } else {
        // conjugate symmetry holds bitwise with no mirroring: the roots table
        // is conjugate-exact, so the b and q-1-b accumulations mirror term
        // by term
        parallel_for(1, q - 1, jobs, [&](int64_t b) { recs[b - 1] = direct_record(b); });
    }
    return recs;
}

std::vector<cplx> ratio_oracle_smoothed_all(const CharacterTable& tab, double X, int jobs) {
    if (!(X >= 100.0 && X <= 1e7))
        throw std::invalid_argument("ratio_oracle_smoothed_all: X must be in [1e2, 1e7]");
    const int64_t q = tab.q;
    const uint64_t N = static_cast<uint64_t>(std::ceil(X * std::log(1e16)));
    const auto pps = prime_power_list(N);
    struct Term {
        double w;
        uint32_t j;
    };
    std::vector<Term> terms;
    terms.reserve(pps.size());
    for (const auto& [pp, lp] : pps) {
        const uint64_t r = pp % static_cast<uint64_t>(q);
        if (r == 0) continue; // chi vanishes on multiples of q
        const double w = lp * std::exp(-static_cast<double>(pp) / X) / static_cast<double>(pp);
        terms.push_back({w, tab.dlog[r]});
    }
    const uint64_t m = static_cast<uint64_t>(q - 1);
    std::vector<cplx> out(static_cast<size_t>(m), cplx{0.0, 0.0});
    parallel_for(1, q - 1, jobs, [&](int64_t b) {
        NeumaierSum re, im;
        for (const Term& t : terms) {
            const cplx r = tab.roots[static_cast<uint64_t>(b) * t.j % m];
            re.add(t.w * r.real());
            im.add(t.w * r.imag());
        }
        out[b] = {re.value(), im.value()};
    });
    return out;
}

cplx ratio_oracle_smoothed(const CharacterTable& tab, int64_t b, double X) {
    if (b < 1 || b > tab.q - 2)
        throw std::invalid_argument("ratio_oracle_smoothed: b must be in [1, q-2]");
    return ratio_oracle_smoothed_all(tab, X)[b];
}

std::string l_values_csv(int64_t q, const std::vector<LValueRecord>& recs) {
    std::string out = "q,b,re_L1,im_L1,re_Lp1,im_Lp1,ratio\n";
    for (const LValueRecord& r : recs) {
        out += std::to_string(q);
        out += ',';
        out += std::to_string(r.b);
        out += ',';
        out += fmt17(r.L1.real());
        out += ',';
        out += fmt17(r.L1.imag());
        out += ',';
        out += fmt17(r.Lp1.real());
        out += ',';
        out += fmt17(r.Lp1.imag());
        out += ',';
        out += fmt17(r.ratio);
        out += '\n';
    }
    return out;
}

} // namespace llr
