#include "chebwav/dwt.hpp"

#include <cmath>
#include <stdexcept>

namespace chebwav {

namespace {

// Even-indexed samples of the circular convolution of x with taps.
std::vector<double> circ_conv_down(const std::vector<double>& x,
                                   const std::vector<double>& taps) {
    const std::size_t n = x.size();
    std::vector<double> out(n / 2, 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t t = 2 * i;
        double acc = 0.0;
        for (std::size_t k = 0; k < taps.size(); ++k)
            acc += taps[k] * x[(t + n - k % n) % n];
        out[i] = acc;
    }
    return out;
}

// Even-indexed samples of the full linear convolution (length ceil((n+M)/2)).
std::vector<double> lin_conv_down(const std::vector<double>& x,
                                  const std::vector<double>& taps) {
    const std::size_t full = x.size() + taps.size() - 1;
    std::vector<double> out((full + 1) / 2, 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t t = 2 * i;
        double acc = 0.0;
        for (std::size_t k = 0; k < taps.size(); ++k) {
            if (k > t) break;
            const std::size_t j = t - k;
            if (j < x.size()) acc += taps[k] * x[j];
        }
        out[i] = acc;
    }
    return out;
}

// Circular convolution of the zero-stuffed upsampling of c with taps,
// output length n = 2 * c.size().
std::vector<double> up_circ_conv(const std::vector<double>& c,
                                 const std::vector<double>& taps,
                                 std::size_t n) {
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0.0) continue;
        for (std::size_t k = 0; k < taps.size(); ++k)
            out[(2 * i + k) % n] += c[i] * taps[k];
    }
    return out;
}

// Linear convolution of the zero-stuffed upsampling of c with taps.
std::vector<double> up_lin_conv(const std::vector<double>& c,
                                const std::vector<double>& taps) {
    if (c.empty()) return {};
    std::vector<double> out(2 * c.size() - 1 + taps.size() - 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0.0) continue;
        for (std::size_t k = 0; k < taps.size(); ++k)
            out[2 * i + k] += c[i] * taps[k];
    }
    return out;
}

// Coefficient count per level, derived from the original length.
std::vector<std::size_t> level_lengths(std::size_t n, int levels,
                                       BoundaryMode mode, std::size_t order) {
    std::vector<std::size_t> len(static_cast<std::size_t>(levels) + 1);
    len[0] = n;
    for (int k = 1; k <= levels; ++k) {
        const std::size_t prev = len[static_cast<std::size_t>(k - 1)];
        len[static_cast<std::size_t>(k)] = mode == BoundaryMode::Periodic
                                               ? (prev + 1) / 2
                                               : (prev + order + 1) / 2;
    }
    return len;
}

}  // namespace

DecompositionTree analyze(const Signal& signal, const FilterBank& bank,
                          int levels, BoundaryMode mode) {
    const std::size_t n = signal.samples.size();
    if (n == 0) throw std::invalid_argument("cannot analyze an empty signal");
    for (double s : signal.samples)
        if (!std::isfinite(s))
            throw std::invalid_argument("signal contains a non-finite sample");
    if (levels < 1) throw std::invalid_argument("analysis needs levels >= 1");
    if (levels >= 63 || (1ULL << levels) > n)
        throw std::invalid_argument(
            "too many levels for signal length " + std::to_string(n) +
            " (need 2^levels <= length)");

    DecompositionTree tree;
    tree.levels = levels;
    tree.boundary_mode = mode;
    tree.original_length = static_cast<int>(n);
    std::vector<double> cur = signal.samples;
    for (int k = 0; k < levels; ++k) {
        if (mode == BoundaryMode::Periodic) {
            if (cur.size() % 2 != 0) cur.push_back(cur.back());
            tree.details.push_back(circ_conv_down(cur, bank.g_d));
            cur = circ_conv_down(cur, bank.h_d);
        } else {
            tree.details.push_back(lin_conv_down(cur, bank.g_d));
            cur = lin_conv_down(cur, bank.h_d);
        }
    }
    tree.approximation = std::move(cur);
    return tree;
}

Signal synthesize(const DecompositionTree& tree, const FilterBank& bank) {
    if (tree.levels < 1 ||
        tree.details.size() != static_cast<std::size_t>(tree.levels) ||
        tree.original_length < 1)
        throw std::invalid_argument("malformed decomposition tree");
    const std::size_t order = static_cast<std::size_t>(bank.order);
    const std::vector<std::size_t> len =
        level_lengths(static_cast<std::size_t>(tree.original_length),
                      tree.levels, tree.boundary_mode, order);
    if (tree.approximation.size() != len[static_cast<std::size_t>(tree.levels)])
        throw std::invalid_argument("approximation length mismatch");
    for (int k = 1; k <= tree.levels; ++k)
        if (tree.details[static_cast<std::size_t>(k - 1)].size() !=
            len[static_cast<std::size_t>(k)])
            throw std::invalid_argument("detail length mismatch at level " +
                                        std::to_string(k));

    std::vector<double> cur = tree.approximation;
    for (int k = tree.levels; k >= 1; --k) {
        const std::vector<double>& det =
            tree.details[static_cast<std::size_t>(k - 1)];
        const std::size_t target = len[static_cast<std::size_t>(k - 1)];
        if (tree.boundary_mode == BoundaryMode::Periodic) {
            const std::size_t n = 2 * cur.size();
            std::vector<double> low = up_circ_conv(cur, bank.h_r, n);
            const std::vector<double> high = up_circ_conv(det, bank.g_r, n);
            for (std::size_t i = 0; i < n; ++i) low[i] += high[i];
            // undo the per-level bank delay, then drop the extension sample
            std::vector<double> aligned(n);
            for (std::size_t i = 0; i < n; ++i)
                aligned[i] = low[(i + order) % n];
            aligned.resize(target);
            cur = std::move(aligned);
        } else {
            std::vector<double> low = up_lin_conv(cur, bank.h_r);
            const std::vector<double> high = up_lin_conv(det, bank.g_r);
            for (std::size_t i = 0; i < high.size() && i < low.size(); ++i)
                low[i] += high[i];
            // perfect-reconstruction window starts one bank delay in
            std::vector<double> aligned(target, 0.0);
            for (std::size_t i = 0; i < target; ++i)
                if (order + i < low.size()) aligned[i] = low[order + i];
            cur = std::move(aligned);
        }
    }
    return Signal{std::move(cur), ""};
}

double reconstruction_error(const Signal& signal, const FilterBank& bank,
                            int levels, BoundaryMode mode) {
    const Signal out = synthesize(analyze(signal, bank, levels, mode), bank);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < signal.samples.size(); ++i) {
        const double d = out.samples[i] - signal.samples[i];
        num += d * d;
        den += signal.samples[i] * signal.samples[i];
    }
    if (den == 0.0) return std::sqrt(num);
    return std::sqrt(num / den);
}

}  // namespace chebwav
