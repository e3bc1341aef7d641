#pragma once

#include "chebwav/dwt.hpp"
#include "chebwav/filters.hpp"

namespace chebwav {

enum class ShrinkMode { Soft, Hard };
enum class ThresholdRule { Universal, Manual };

struct DenoiseConfig {
    int levels = 1;
    ShrinkMode mode = ShrinkMode::Soft;
    ThresholdRule rule = ThresholdRule::Universal;
    double manual_threshold = 0.0;  // used when rule == Manual; must be >= 0
    FilterKind bank_kind = FilterKind::TypeII;
    int bank_order = 3;
    int bank_upsample_k = 0;  // TypeIIGeneralized only
};

// Noise-level estimate from the finest detail band:
// median(|d|) / 0.6745 (the Gaussian consistency constant).
double estimate_sigma(const std::vector<double>& finest_details);

// Threshold detail coefficients; the approximation band passes through.
// Universal rule: t = sigma_hat * sqrt(2 ln N) with N = original_length and
// sigma_hat taken from the finest band; the same t applies at every level.
// Soft: sign(d) * max(|d| - t, 0).  Hard: d * 1{|d| > t}.
DecompositionTree shrink(const DecompositionTree& tree,
                         const DenoiseConfig& config);

// analyze -> shrink -> synthesize with the configured bank (Periodic
// boundary); output length equals input length.
Signal denoise(const Signal& signal, const DenoiseConfig& config);

// The filter bank prototype a config refers to.
FilterTaps config_prototype(const DenoiseConfig& config);

}  // namespace chebwav
