#include "chebwav/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chebwav {

double estimate_sigma(const std::vector<double>& finest_details) {
    if (finest_details.empty())
        throw std::invalid_argument("sigma estimate needs a nonempty band");
    std::vector<double> mags(finest_details.size());
    for (std::size_t i = 0; i < mags.size(); ++i)
        mags[i] = std::abs(finest_details[i]);
    std::sort(mags.begin(), mags.end());
    const std::size_t n = mags.size();
    const double median =
        n % 2 == 1 ? mags[n / 2] : 0.5 * (mags[n / 2 - 1] + mags[n / 2]);
    return median / 0.6745;
}

namespace {

double apply_threshold(double d, double t, ShrinkMode mode) {
    if (mode == ShrinkMode::Soft) {
        const double m = std::abs(d) - t;
        return m > 0.0 ? std::copysign(m, d) : 0.0;
    }
    return std::abs(d) > t ? d : 0.0;
}

}  // namespace

DecompositionTree shrink(const DecompositionTree& tree,
                         const DenoiseConfig& config) {
    if (config.levels < 1)
        throw std::invalid_argument("shrink needs levels >= 1");
    if (tree.levels < config.levels)
        throw std::invalid_argument("tree has fewer levels than configured");
    if (config.rule == ThresholdRule::Manual && config.manual_threshold < 0.0)
        throw std::invalid_argument("manual threshold must be >= 0");

    double t = config.manual_threshold;
    if (config.rule == ThresholdRule::Universal) {
        const double sigma = estimate_sigma(tree.details.front());
        t = sigma * std::sqrt(2.0 * std::log(
                        static_cast<double>(tree.original_length)));
    }
    DecompositionTree out = tree;
    for (int k = 0; k < config.levels; ++k)
        for (double& d : out.details[static_cast<std::size_t>(k)])
            d = apply_threshold(d, t, config.mode);
    return out;
}

FilterTaps config_prototype(const DenoiseConfig& config) {
    switch (config.bank_kind) {
        case FilterKind::TypeI:
            return make_type1(config.bank_order);
        case FilterKind::TypeII:
            return make_type2(config.bank_order);
        case FilterKind::TypeIIGeneralized:
            return make_type2_generalized(config.bank_order,
                                          config.bank_upsample_k);
        default:
            throw std::invalid_argument("denoise config needs a named filter kind");
    }
}

Signal denoise(const Signal& signal, const DenoiseConfig& config) {
    const FilterBank bank = build_bank(config_prototype(config));
    const DecompositionTree tree =
        analyze(signal, bank, config.levels, BoundaryMode::Periodic);
    Signal out = synthesize(shrink(tree, config), bank);
    out.name = signal.name;
    return out;
}

}  // namespace chebwav
