#include "chebwav/filterbank.hpp"

#include <cmath>
#include <stdexcept>

namespace chebwav {

namespace {

// Rational tap sequences of the four filters without the sqrt(2) factor;
// products of two of them pick up an explicit factor 2.
struct UnscaledBank {
    LaurentPoly h_r, g_r, h_d, g_d;
};

UnscaledBank unscaled(const FilterTaps& prototype) {
    const std::vector<Rational>& p = prototype.coefficients;
    const int M = static_cast<int>(p.size()) - 1;
    std::vector<Rational> gr(p.size());
    for (int n = 0; n <= M; ++n) {
        gr[static_cast<std::size_t>(n)] =
            (n % 2 == 0) ? -p[static_cast<std::size_t>(M - n)]
                         : p[static_cast<std::size_t>(M - n)];
    }
    std::vector<Rational> hd(p.rbegin(), p.rend());
    std::vector<Rational> gd(gr.rbegin(), gr.rend());
    UnscaledBank b;
    b.h_r = LaurentPoly(p, 0);
    b.g_r = LaurentPoly(std::move(gr), 0);
    b.h_d = LaurentPoly(std::move(hd), 0);
    b.g_d = LaurentPoly(std::move(gd), 0);
    return b;
}

LaurentPoly twice(const LaurentPoly& a) {
    return LaurentPoly::delay(Rational(2), 0) * a;
}

}  // namespace

FilterBank build_bank(const FilterTaps& prototype) {
    const int M = static_cast<int>(prototype.coefficients.size()) - 1;
    if (M < 1 || M % 2 == 0)
        throw std::invalid_argument(
            "filter bank prototype must have even length (odd order), got " +
            std::to_string(M + 1) + " taps");
    FilterBank bank;
    bank.prototype = prototype;
    bank.order = M;
    const double root2 = std::sqrt(2.0);
    bank.h_r.resize(prototype.coefficients.size());
    bank.g_r.resize(prototype.coefficients.size());
    for (int n = 0; n <= M; ++n) {
        bank.h_r[static_cast<std::size_t>(n)] =
            root2 * prototype.coefficients[static_cast<std::size_t>(n)].to_double();
        const double rev =
            root2 * prototype.coefficients[static_cast<std::size_t>(M - n)].to_double();
        bank.g_r[static_cast<std::size_t>(n)] = (n % 2 == 0) ? -rev : rev;
    }
    bank.h_d.assign(bank.h_r.rbegin(), bank.h_r.rend());
    bank.g_d.assign(bank.g_r.rbegin(), bank.g_r.rend());
    return bank;
}

LaurentPoly alias_residual(const FilterBank& bank) {
    const UnscaledBank u = unscaled(bank.prototype);
    return twice(u.h_r * substitute_negz(u.h_d) +
                 u.g_r * substitute_negz(u.g_d));
}

LaurentPoly distortion_product(const FilterBank& bank) {
    const UnscaledBank u = unscaled(bank.prototype);
    return twice(u.h_r * u.h_d + u.g_r * u.g_d);
}

bool even_shift_orthogonal(const FilterTaps& prototype) {
    const std::vector<Rational>& p = prototype.coefficients;
    const int len = static_cast<int>(p.size());
    // Gram vector 2*sum_k p[k] p[k-2n] over all shifts n covering the taps.
    for (int n = -(len - 1) / 2; n <= (len - 1) / 2; ++n) {
        Rational acc;
        for (int k = 0; k < len; ++k) {
            const int j = k - 2 * n;
            if (j >= 0 && j < len)
                acc += p[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(j)];
        }
        const Rational want = (n == 0) ? Rational(1, 2) : Rational(0);
        if (acc != want) return false;
    }
    return true;
}

BankPropertyReport analyze_bank(const FilterTaps& prototype) {
    const FilterBank bank = build_bank(prototype);
    BankPropertyReport r;
    r.alias_residual = alias_residual(bank);
    r.distortion_product = distortion_product(bank);
    if (auto d = is_pure_delay(r.distortion_product);
        d && d->first == Rational(2))
        r.pr_delay = d->second;
    r.is_orthogonal = even_shift_orthogonal(prototype);

    // Same alias computation on the double-precision taps, for linting
    // prototypes that only exist in floating point.
    const std::size_t len = bank.h_r.size();
    double worst = 0.0;
    for (std::size_t d = 0; d + 1 <= 2 * len - 1; ++d) {
        double acc = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
            const std::size_t j = d - i;
            if (d < i || j >= len) continue;
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            acc += bank.h_r[i] * sign * bank.h_d[j] +
                   bank.g_r[i] * sign * bank.g_d[j];
        }
        worst = std::max(worst, std::abs(acc));
    }
    r.float_alias_norm = worst;
    return r;
}

}  // namespace chebwav
