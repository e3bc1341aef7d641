#include "chebwav/filters.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace chebwav {

namespace {

void require_odd_order(int m) {
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument(
            "filter order must be an odd positive integer, got " +
            std::to_string(m));
}

}  // namespace

Rational FilterTaps::sum() const {
    Rational s;
    for (const Rational& c : coefficients) s += c;
    return s;
}

bool FilterTaps::is_symmetric() const {
    const std::size_t n = coefficients.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (coefficients[i] != coefficients[n - 1 - i]) return false;
    return true;
}

FilterTaps make_type1(int m) {
    require_odd_order(m);
    FilterTaps t;
    t.coefficients.assign(m + 1, Rational(0));
    t.coefficients.front() = Rational(1, 2);
    t.coefficients.back() = Rational(1, 2);
    t.order_m = m;
    t.kind = FilterKind::TypeI;
    return t;
}

FilterTaps make_type2(int m) {
    require_odd_order(m);
    FilterTaps t;
    t.coefficients.assign(m + 1, Rational(1, m + 1));
    t.order_m = m;
    t.kind = FilterKind::TypeII;
    return t;
}

FilterTaps make_type2_generalized(int m, int k) {
    require_odd_order(m);
    if (k < 0) throw std::invalid_argument("upsampling index k must be >= 0");
    const int step = 2 * k + 1;
    FilterTaps t;
    t.coefficients.assign(step * m + 1, Rational(0));
    for (int n = 0; n <= m; ++n) t.coefficients[step * n] = Rational(1, m + 1);
    t.order_m = m;
    t.kind = FilterKind::TypeIIGeneralized;
    t.upsample_k = k;
    return t;
}

FilterTaps make_custom(std::vector<Rational> coefficients) {
    if (coefficients.empty())
        throw std::invalid_argument("custom filter needs at least one tap");
    FilterTaps t;
    t.coefficients = std::move(coefficients);
    t.order_m = static_cast<int>(t.coefficients.size()) - 1;
    t.kind = FilterKind::Custom;
    if (t.sum() != Rational(1))
        throw std::invalid_argument("filter taps must sum to 1, got " +
                                    t.sum().str());
    return t;
}

std::vector<FrequencySample> frequency_response(const FilterTaps& taps,
                                                int grid_size) {
    if (grid_size < 2)
        throw std::invalid_argument("frequency grid needs at least 2 points");
    std::vector<FrequencySample> out(grid_size);
    double prev_raw = 0.0, offset = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const double omega =
            std::numbers::pi * static_cast<double>(i) / (grid_size - 1);
        std::complex<double> h(0.0, 0.0);
        for (std::size_t n = 0; n < taps.coefficients.size(); ++n) {
            const double c = taps.coefficients[n].to_double();
            if (c != 0.0)
                h += c * std::polar(1.0, -omega * static_cast<double>(n));
        }
        const double raw = std::arg(h);
        if (i > 0) {
            // standard unwrap: pull each step back into (-pi, pi]
            double d = raw - prev_raw;
            while (d > std::numbers::pi) { offset -= 2.0 * std::numbers::pi; d -= 2.0 * std::numbers::pi; }
            while (d < -std::numbers::pi) { offset += 2.0 * std::numbers::pi; d += 2.0 * std::numbers::pi; }
        }
        prev_raw = raw;
        out[i] = {omega, std::abs(h), raw + offset};
    }
    return out;
}

}  // namespace chebwav
