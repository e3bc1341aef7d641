#pragma once

#include <string>
#include <vector>

#include "chebwav/filterbank.hpp"

namespace chebwav {

struct Signal {
    std::vector<double> samples;
    std::string name;
};

enum class BoundaryMode { Periodic, ZeroPad };

// Multi-level decomposition: coarsest approximation plus one detail band per
// level, finest first. original_length is the pre-extension input length;
// all per-level coefficient counts are recomputed from it.
struct DecompositionTree {
    std::vector<double> approximation;
    std::vector<std::vector<double>> details;  // details[0] = finest level
    int levels = 0;
    BoundaryMode boundary_mode = BoundaryMode::Periodic;
    int original_length = 0;
};

// Per-level: convolve the running approximation with h_d / g_d under the
// boundary mode, keep even-indexed outputs. Periodic mode right-extends
// odd-length inputs by repeating the last sample. Requires levels >= 1 and
// 2^levels <= signal length.
DecompositionTree analyze(const Signal& signal, const FilterBank& bank,
                          int levels, BoundaryMode mode);

// Inverse: upsample by 2, convolve with h_r / g_r, sum branches; each level
// compensates the bank delay (circular shift by the filter order in Periodic
// mode, window offset in ZeroPad mode) so the output aligns with the input.
Signal synthesize(const DecompositionTree& tree, const FilterBank& bank);

// Relative L2 error of the analyze/synthesize round trip.
double reconstruction_error(const Signal& signal, const FilterBank& bank,
                            int levels, BoundaryMode mode);

}  // namespace chebwav
