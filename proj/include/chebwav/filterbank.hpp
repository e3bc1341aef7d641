#pragma once

#include <optional>
#include <vector>

#include "chebwav/filters.hpp"
#include "chebwav/laurent.hpp"

namespace chebwav {

// Two-channel analysis/synthesis bank derived from a lowpass prototype p of
// odd order M (length M+1):
//   h_r[n] = sqrt(2) * p[n]            (reconstruction lowpass)
//   g_r[n] = (-1)^(n+1) * h_r[M-n]     (reconstruction highpass)
//   h_d[n] = h_r[M-n],  g_d[n] = g_r[M-n]   (decomposition pair)
// The sqrt(2) is applied exactly once; algebraic checks work on the rational
// prototype and carry the product factor sqrt(2)^2 = 2 explicitly.
struct FilterBank {
    std::vector<double> h_r, g_r, h_d, g_d;
    FilterTaps prototype;
    int order = 0;  // M = tap count - 1
};

struct BankPropertyReport {
    LaurentPoly alias_residual;      // H_r(z)H_d(-z) + G_r(z)G_d(-z), exact
    LaurentPoly distortion_product;  // H_r(z)H_d(z) + G_r(z)G_d(z), exact
    std::optional<int> pr_delay;     // set iff distortion == 2*z^-l
    bool is_orthogonal = false;
    double float_alias_norm = 0.0;   // max |alias coeff| from the double taps
};

FilterBank build_bank(const FilterTaps& prototype);

LaurentPoly alias_residual(const FilterBank& bank);
LaurentPoly distortion_product(const FilterBank& bank);

// Even-shift orthogonality of the sqrt(2)-scaled prototype:
// sum_k h[k] h[k-2n] = delta[n], checked in exact rational arithmetic
// as 2*(p (*) p)[2n] = delta[n].
bool even_shift_orthogonal(const FilterTaps& prototype);

BankPropertyReport analyze_bank(const FilterTaps& prototype);

}  // namespace chebwav
