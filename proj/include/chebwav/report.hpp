#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace chebwav {

// Machine-readable property summary for one filter family member:
// bank verdicts plus the transition-matrix spectral and Markov diagnostics.
struct ReportDocument {
    int kind = 0;  // 1 or 2
    int order = 0;
    std::string version;
    bool alias_zero = false;
    std::optional<int> pr_delay;
    bool orthogonal = false;
    bool condition_e = false;
    std::vector<std::complex<double>> eigenvalues;
    bool stochastic = false;
    bool irreducible = false;
    bool aperiodic = false;
};

// Runs the full verification pipeline for kind in {1, 2} and odd m.
ReportDocument make_report(int kind, int m);

// Deterministic JSON with frozen key order: kind, order, version,
// alias_zero, pr_delay, orthogonal, condition_e, eigenvalues, stochastic,
// irreducible, aperiodic. Eigenvalues are [re, im] pairs quantized to
// 12 significant digits; serialize(parse(s)) == s.
std::string serialize_report(const ReportDocument& doc);
ReportDocument parse_report(const std::string& json_text);

}  // namespace chebwav
