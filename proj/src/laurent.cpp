#include "chebwav/laurent.hpp"

#include <algorithm>

namespace chebwav {

namespace {

// Trim leading/trailing zeros so equality is plain member comparison.
void canonicalize(std::vector<Rational>& c, int& min_degree) {
    std::size_t first = 0;
    while (first < c.size() && c[first].is_zero()) ++first;
    std::size_t last = c.size();
    while (last > first && c[last - 1].is_zero()) --last;
    if (first == last) {
        c.clear();
        min_degree = 0;
        return;
    }
    min_degree += static_cast<int>(first);
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(last), c.end());
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(first));
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<Rational> coefficients, int min_degree)
    : coeffs_(std::move(coefficients)), min_degree_(min_degree) {
    canonicalize(coeffs_, min_degree_);
}

LaurentPoly LaurentPoly::delay(Rational gain, int l) {
    return LaurentPoly({gain}, l);
}

Rational LaurentPoly::at(int d) const {
    const int i = d - min_degree_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int lo = std::min(a.min_degree(), b.min_degree());
    const int hi = std::max(a.max_degree(), b.max_degree());
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (int d = lo; d <= hi; ++d)
        c[static_cast<std::size_t>(d - lo)] = a.at(d) + b.at(d);
    return LaurentPoly(std::move(c), lo);
}

LaurentPoly operator-(const LaurentPoly& a) {
    std::vector<Rational> c = a.coeffs_;
    for (Rational& x : c) x = -x;
    return LaurentPoly(std::move(c), a.min_degree_);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly::zero();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPoly(std::move(c), a.min_degree_ + b.min_degree_);
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_degree_ == b.min_degree_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const int d = min_degree_ + static_cast<int>(i);
        Rational c = coeffs_[i];
        if (s.empty()) {
            if (c.num() < 0) { s += "-"; c = -c; }
        } else {
            s += c.num() < 0 ? " - " : " + ";
            if (c.num() < 0) c = -c;
        }
        if (d == 0) {
            s += c.str();
        } else {
            if (c != Rational(1)) s += c.str() + "*";
            s += "z^" + std::to_string(-d);
        }
    }
    return s;
}

LaurentPoly from_taps(const FilterTaps& taps, Rational scale) {
    return LaurentPoly(
        [&] {
            std::vector<Rational> c = taps.coefficients;
            for (Rational& x : c) x *= scale;
            return c;
        }(),
        0);
}

LaurentPoly substitute_negz(const LaurentPoly& a) {
    std::vector<Rational> c = a.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int d = a.min_degree() + static_cast<int>(i);
        if (d % 2 != 0) c[i] = -c[i];
    }
    return LaurentPoly(std::move(c), a.min_degree());
}

LaurentPoly time_reverse(const LaurentPoly& a) {
    std::vector<Rational> c = a.coefficients();
    std::reverse(c.begin(), c.end());
    return LaurentPoly(std::move(c), -a.max_degree());
}

std::optional<std::pair<Rational, int>> is_pure_delay(const LaurentPoly& a) {
    if (a.coefficients().size() != 1) return std::nullopt;
    return std::make_pair(a.coefficients().front(), a.min_degree());
}

}  // namespace chebwav
