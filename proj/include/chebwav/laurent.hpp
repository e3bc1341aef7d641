#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chebwav/filters.hpp"
#include "chebwav/rational.hpp"

namespace chebwav {

// Finite Laurent polynomial in z^-1 with exact rational coefficients.
// coefficients[i] multiplies z^-(min_degree + i); a negative min_degree
// carries positive powers of z. Always stored trimmed: first and last
// coefficients are nonzero unless the polynomial is identically zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::vector<Rational> coefficients, int min_degree);

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly delay(Rational gain, int l);  // gain * z^-l

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    int min_degree() const { return min_degree_; }
    int max_degree() const {
        return min_degree_ + static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of z^-d (zero outside the stored range).
    Rational at(int d) const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    // Human-readable form like "1/2 - 1/2*z^-3" (debugging and CLI output).
    std::string str() const;

private:
    std::vector<Rational> coeffs_;
    int min_degree_ = 0;
};

// Z-transform of the taps: coefficient of z^-n is scale * taps[n].
LaurentPoly from_taps(const FilterTaps& taps, Rational scale = Rational(1));

// a(-z): coefficient of z^-n multiplied by (-1)^n.
LaurentPoly substitute_negz(const LaurentPoly& a);

// a(z^-1): exponents negated (time reversal).
LaurentPoly time_reverse(const LaurentPoly& a);

// (gain, delay) iff a = gain * z^-delay exactly; empty otherwise
// (zero is not a delay).
std::optional<std::pair<Rational, int>> is_pure_delay(const LaurentPoly& a);

}  // namespace chebwav
