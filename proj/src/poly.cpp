#include "chebwav/poly.hpp"

#include <stdexcept>

namespace chebwav {

namespace {

double recurrence(int m, double x, double p0, double p1) {
    if (m == 0) return p0;
    double prev = p0, cur = p1;
    for (int i = 2; i <= m; ++i) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

double chebyshev_t(int m, double x) {
    if (m < 0) throw std::invalid_argument("chebyshev_t: negative degree");
    return recurrence(m, x, 1.0, x);
}

double chebyshev_u(int m, double x) {
    if (m < 0) throw std::invalid_argument("chebyshev_u: negative degree");
    return recurrence(m, x, 1.0, 2.0 * x);
}

}  // namespace chebwav
