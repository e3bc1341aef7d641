#include "chebwav/signals.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace chebwav {

Signal make_bumps(int n) {
    if (n < 1) throw std::invalid_argument("signal length must be >= 1");
    static constexpr double pos[] = {0.1,  0.13, 0.15, 0.23, 0.25, 0.40,
                                     0.44, 0.65, 0.76, 0.78, 0.81};
    static constexpr double hgt[] = {4.0, 5.0, 3.0, 4.0, 5.0, 4.2,
                                     2.1, 4.3, 3.1, 5.1, 4.2};
    static constexpr double wid[] = {0.005, 0.005, 0.006, 0.01,  0.01, 0.03,
                                     0.01,  0.01,  0.005, 0.008, 0.005};
    Signal s;
    s.name = "bumps";
    s.samples.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        double v = 0.0;
        for (std::size_t b = 0; b < std::size(pos); ++b) {
            const double u = std::abs((t - pos[b]) / wid[b]);
            v += hgt[b] * std::pow(1.0 + u, -4.0);
        }
        s.samples[static_cast<std::size_t>(i)] = v;
    }
    return s;
}

Signal make_freqstep(int n) {
    if (n < 1) throw std::invalid_argument("signal length must be >= 1");
    Signal s;
    s.name = "freqstep";
    s.samples.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        const double cycles = i < n / 2 ? 4.0 : 32.0;
        s.samples[static_cast<std::size_t>(i)] =
            std::sin(2.0 * std::numbers::pi * cycles * t);
    }
    return s;
}

double GaussianSource::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller on uniforms from (0, 1]; u1 > 0 guaranteed by the +1 shift.
    const double inv = 1.0 / (static_cast<double>(engine_.max()) + 2.0);
    const double u1 = (static_cast<double>(engine_()) + 1.0) * inv;
    const double u2 = (static_cast<double>(engine_()) + 1.0) * inv;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

std::vector<double> GaussianSource::sample(int n) {
    if (n < 0) throw std::invalid_argument("sample count must be >= 0");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (double& x : out) x = next();
    return out;
}

Signal add_noise_snr(const Signal& clean, const std::vector<double>& noise,
                     double target_snr_db) {
    if (noise.size() != clean.samples.size())
        throw std::invalid_argument("noise length must match the signal");
    double cs = 0.0, ns = 0.0;
    for (double x : clean.samples) cs += x * x;
    for (double x : noise) ns += x * x;
    if (ns == 0.0) throw std::invalid_argument("noise vector is zero");
    const double alpha =
        std::sqrt(cs / ns) * std::pow(10.0, -target_snr_db / 20.0);
    Signal out = clean;
    out.name = clean.name.empty() ? "noisy" : clean.name + "+noise";
    for (std::size_t i = 0; i < noise.size(); ++i)
        out.samples[i] += alpha * noise[i];
    return out;
}

double snr_db(const Signal& reference, const Signal& signal) {
    if (reference.samples.size() != signal.samples.size())
        throw std::invalid_argument("SNR needs equal-length signals");
    double rs = 0.0, es = 0.0;
    for (std::size_t i = 0; i < reference.samples.size(); ++i) {
        rs += reference.samples[i] * reference.samples[i];
        const double d = signal.samples[i] - reference.samples[i];
        es += d * d;
    }
    if (es == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(rs / es);
}

}  // namespace chebwav
