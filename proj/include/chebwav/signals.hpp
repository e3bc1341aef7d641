#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chebwav/dwt.hpp"

namespace chebwav {

// Piecewise-smooth benchmark: sum of eleven rational-kernel bumps
// (1 + |(t - p)/w|)^-4 on the grid t = i/n, i = 0..n-1.
Signal make_bumps(int n);

// Two concatenated sinusoids with a frequency step at the midpoint
// (4 cycles, then 32 cycles over the full window).
Signal make_freqstep(int n);

// Deterministic standard-normal generator: fixed 64-bit Mersenne Twister
// plus an explicit Box-Muller transform, so streams are identical across
// platforms and library versions.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}
    double next();
    std::vector<double> sample(int n);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// clean + noise scaled so that the realized SNR is exactly snr_db:
// noisy = clean + noise * (||clean|| / (||noise|| * 10^(snr_db/20))).
Signal add_noise_snr(const Signal& clean, const std::vector<double>& noise,
                     double snr_db);

// 20*log10(||reference|| / ||signal - reference||); +inf when equal.
double snr_db(const Signal& reference, const Signal& signal);

}  // namespace chebwav
