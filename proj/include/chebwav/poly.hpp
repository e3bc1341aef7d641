#pragma once

namespace chebwav {

enum class PolyKind { FirstKind, SecondKind };

// Chebyshev polynomial of the first kind, T_m(x), by the three-term
// recurrence T_m = 2x T_{m-1} - T_{m-2} with T_0 = 1, T_1 = x.
double chebyshev_t(int m, double x);

// Chebyshev polynomial of the second kind, U_m(x); same recurrence with
// U_0 = 1, U_1 = 2x.
double chebyshev_u(int m, double x);

}  // namespace chebwav
