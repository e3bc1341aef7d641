#pragma once

#include <vector>

#include "chebwav/filters.hpp"

namespace chebwav {

// Scaling/wavelet function samples on the dyadic grid
// { n * 2^-iterations : 0 <= n <= M * 2^iterations } covering [0, M],
// where M is the effective prototype order.
struct CascadeResult {
    std::vector<double> phi_samples;
    std::vector<double> psi_samples;
    int iterations = 0;
    double grid_step = 1.0;  // 2^-iterations; sample n sits at t = n * grid_step
    // [j-1] = step-weighted L2 distance between iterate j and iterate j-1,
    // the coarser iterate injected onto the finer grid by piecewise-constant
    // hold (dyadic nesting).
    std::vector<double> successive_l2_distances;
};

// Fixed-point iteration phi <- sum_n 2*h[n] phi(2t - n) starting from the
// unit sample; psi is one highpass application to the final iterate.
// iterations must be in [1, 20] and the final grid is capped at 2^26 samples.
CascadeResult cascade_iterate(const FilterTaps& prototype, int iterations);

}  // namespace chebwav
