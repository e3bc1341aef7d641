#include "chebwav/cascade.hpp"

#include <cmath>
#include <stdexcept>

#include "chebwav/filterbank.hpp"

namespace chebwav {

namespace {

// Next iterate: upsample by 2 (zeros between samples), convolve with 2*h.
std::vector<double> refine(const std::vector<double>& v,
                           const std::vector<double>& taps2) {
    const std::size_t up_len = 2 * v.size() - 1;
    std::vector<double> out(up_len + taps2.size() - 1, 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0.0) continue;
        for (std::size_t n = 0; n < taps2.size(); ++n)
            out[2 * i + n] += v[i] * taps2[n];
    }
    return out;
}

}  // namespace

CascadeResult cascade_iterate(const FilterTaps& prototype, int iterations) {
    const int M = static_cast<int>(prototype.coefficients.size()) - 1;
    if (M < 1 || M % 2 == 0)
        throw std::invalid_argument("cascade needs an odd-order prototype");
    if (iterations < 1 || iterations > 20)
        throw std::invalid_argument("cascade iterations must be in [1, 20]");
    if ((static_cast<long long>(M) << iterations) + 1 > (1LL << 26))
        throw std::invalid_argument("cascade grid would exceed the memory bound");

    std::vector<double> taps2(prototype.coefficients.size());
    for (std::size_t n = 0; n < taps2.size(); ++n)
        taps2[n] = 2.0 * prototype.coefficients[n].to_double();

    CascadeResult res;
    res.iterations = iterations;
    std::vector<double> cur{1.0};  // unit sample, grid spacing 1
    for (int j = 1; j <= iterations; ++j) {
        std::vector<double> next = refine(cur, taps2);
        // distance on the finer grid; coarser iterate held piecewise-constant
        const double step = std::ldexp(1.0, -j);
        const std::size_t fine_n = (static_cast<std::size_t>(M) << j) + 1;
        double acc = 0.0;
        for (std::size_t i = 0; i < fine_n; ++i) {
            const double fine = i < next.size() ? next[i] : 0.0;
            const std::size_t ci = i / 2;
            const double coarse = ci < cur.size() ? cur[ci] : 0.0;
            const double d = fine - coarse;
            acc += d * d;
        }
        res.successive_l2_distances.push_back(std::sqrt(step * acc));
        cur = std::move(next);
    }

    const std::size_t grid_n = (static_cast<std::size_t>(M) << iterations) + 1;
    cur.resize(grid_n, 0.0);
    res.grid_step = std::ldexp(1.0, -iterations);
    res.phi_samples = cur;

    // One highpass application on the final grid:
    // psi(t) = 2 * sum_k g_r[k] * phi(2t - k), evaluated at t = n * step.
    const FilterBank bank = build_bank(prototype);
    const long long scale = 1LL << iterations;
    res.psi_samples.assign(grid_n, 0.0);
    for (std::size_t n = 0; n < grid_n; ++n) {
        double acc = 0.0;
        for (std::size_t k = 0; k < bank.g_r.size(); ++k) {
            const long long idx =
                2 * static_cast<long long>(n) - static_cast<long long>(k) * scale;
            if (idx >= 0 && idx < static_cast<long long>(grid_n))
                acc += bank.g_r[k] * res.phi_samples[static_cast<std::size_t>(idx)];
        }
        res.psi_samples[n] = 2.0 * acc;
    }
    return res;
}

}  // namespace chebwav
