#pragma once

#include <complex>
#include <vector>

#include "chebwav/filters.hpp"
#include "chebwav/rational.hpp"

namespace chebwav {

// Centered (2M-1) x (2M-1) submatrix of the downsampled autocorrelation
// operator (drop odd rows of 2*H*H^T) for a prototype of effective order M.
// Row alpha is the even-shifted slice of a = 2*(h conv h):
//   entries(alpha, beta) = a[2*alpha - beta + 1].
struct TransitionMatrix {
    std::vector<Rational> entries;  // row-major
    int order = 0;

    const Rational& at(int row, int col) const {
        return entries[static_cast<std::size_t>(row * order + col)];
    }
};

TransitionMatrix transition_matrix(const FilterTaps& prototype);

struct SpectrumReport {
    std::vector<std::complex<double>> eigenvalues;  // |.| desc, then re, im desc
    int unit_eigenvalue_multiplicity = 0;           // count of |l - 1| <= tol
    bool satisfies_condition_e = false;
    double tolerance = 0.0;
};

// Dense nonsymmetric eigendecomposition of the matrix. The convergence
// condition holds iff exactly one eigenvalue has |l - 1| <= tol and every
// other satisfies |l| < 1 - tol. Throws ComputationError if the QR
// iteration fails.
SpectrumReport spectrum(const TransitionMatrix& T, double tol = 1e-9);

struct MarkovReport {
    bool is_stochastic = false;        // entries >= 0, every column sums to 1
    std::vector<Rational> column_sums;
    bool is_irreducible = false;       // transition digraph strongly connected
    bool is_aperiodic = false;         // gcd of all cycle lengths equals 1
};

MarkovReport markov_analysis(const TransitionMatrix& T);

// Convergence-condition verdict for every odd m up to max_m (<= 255).
// kind selects the filter family (TypeI or TypeII).
std::vector<std::pair<int, bool>> condition_e_sweep(FilterKind kind, int max_m);

}  // namespace chebwav
