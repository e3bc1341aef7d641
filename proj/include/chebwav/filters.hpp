#pragma once

#include <vector>

#include "chebwav/rational.hpp"

namespace chebwav {

enum class FilterKind { TypeI, TypeII, TypeIIGeneralized, Custom };

// Finite impulse response with exact rational taps and unit coefficient sum.
// Index 0 is the first tap; order_m is the filter order (length-1 for the
// plain kinds, base order for the upsampled generalized kind).
struct FilterTaps {
    std::vector<Rational> coefficients;
    int order_m = 0;
    FilterKind kind = FilterKind::Custom;
    int upsample_k = 0;  // only meaningful for TypeIIGeneralized

    Rational sum() const;
    bool is_symmetric() const;
};

// Two taps of 1/2 at indices 0 and m, zeros between. Requires odd m >= 1.
FilterTaps make_type1(int m);

// m+1 equal taps of 1/(m+1) (moving average). Requires odd m >= 1.
FilterTaps make_type2(int m);

// make_type2(m) upsampled by 2k+1: tap 1/(m+1) at indices divisible by
// 2k+1 up to (2k+1)*m, zeros elsewhere. Length (2k+1)*m + 1.
FilterTaps make_type2_generalized(int m, int k);

// Arbitrary taps; the unit-sum convention is still enforced.
FilterTaps make_custom(std::vector<Rational> coefficients);

struct FrequencySample {
    double omega = 0.0;      // radians, in [0, pi]
    double magnitude = 0.0;
    double phase = 0.0;      // unwrapped radians
};

// H(e^{j*omega}) = sum_n h[n] e^{-j*omega*n} sampled on a uniform grid over
// [0, pi] including both endpoints. grid_size >= 2.
std::vector<FrequencySample> frequency_response(const FilterTaps& taps,
                                                int grid_size);

}  // namespace chebwav
