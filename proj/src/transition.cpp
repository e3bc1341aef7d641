#include "chebwav/transition.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "chebwav/errors.hpp"

namespace chebwav {

TransitionMatrix transition_matrix(const FilterTaps& prototype) {
    const std::vector<Rational>& h = prototype.coefficients;
    const int M = static_cast<int>(h.size()) - 1;
    if (M < 1) throw std::invalid_argument("transition matrix needs order >= 1");
    // a = 2 * (h conv h), indices 0 .. 2M
    std::vector<Rational> a(2 * static_cast<std::size_t>(M) + 1, Rational(0));
    for (int i = 0; i <= M; ++i)
        for (int j = 0; j <= M; ++j)
            a[static_cast<std::size_t>(i + j)] +=
                Rational(2) * h[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(j)];
    TransitionMatrix T;
    T.order = 2 * M - 1;
    T.entries.assign(static_cast<std::size_t>(T.order) * T.order, Rational(0));
    for (int row = 0; row < T.order; ++row)
        for (int col = 0; col < T.order; ++col) {
            const int idx = 2 * row - col + 1;
            if (idx >= 0 && idx <= 2 * M)
                T.entries[static_cast<std::size_t>(row * T.order + col)] =
                    a[static_cast<std::size_t>(idx)];
        }
    return T;
}

SpectrumReport spectrum(const TransitionMatrix& T, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("spectrum tolerance must be > 0");
    const int n = T.order;
    Eigen::MatrixXd A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = T.at(i, j).to_double();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(A, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw ComputationError("eigenvalue iteration did not converge for order " +
                               std::to_string(n));
    SpectrumReport r;
    r.tolerance = tol;
    r.eigenvalues.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        r.eigenvalues.push_back(solver.eigenvalues()(i));
    std::sort(r.eigenvalues.begin(), r.eigenvalues.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  const double ma = std::abs(a), mb = std::abs(b);
                  if (ma != mb) return ma > mb;
                  if (a.real() != b.real()) return a.real() > b.real();
                  return a.imag() > b.imag();
              });
    int units = 0;
    bool rest_inside = true;
    for (const auto& ev : r.eigenvalues) {
        if (std::abs(ev - 1.0) <= tol)
            ++units;
        else if (std::abs(ev) >= 1.0 - tol)
            rest_inside = false;
    }
    r.unit_eigenvalue_multiplicity = units;
    r.satisfies_condition_e = (units == 1) && rest_inside;
    return r;
}

namespace {

std::vector<int> reachable(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<int> seen(adj.size(), 0);
    std::queue<int> q;
    q.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                q.push(v);
            }
    }
    return seen;
}

// Strongly connected components, Kosaraju.
std::vector<int> scc_labels(const std::vector<std::vector<int>>& adj,
                            const std::vector<std::vector<int>>& radj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order, seen(static_cast<std::size_t>(n), 0);
    order.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        // iterative postorder DFS
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < adj[static_cast<std::size_t>(u)].size()) {
                const int v = adj[static_cast<std::size_t>(u)][next++];
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.emplace_back(v, 0);
                }
            } else {
                order.push_back(u);
                stack.pop_back();
            }
        }
    }
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int comp = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (label[static_cast<std::size_t>(*it)] != -1) continue;
        std::queue<int> q;
        q.push(*it);
        label[static_cast<std::size_t>(*it)] = comp;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : radj[static_cast<std::size_t>(u)])
                if (label[static_cast<std::size_t>(v)] == -1) {
                    label[static_cast<std::size_t>(v)] = comp;
                    q.push(v);
                }
        }
        ++comp;
    }
    return label;
}

}  // namespace

MarkovReport markov_analysis(const TransitionMatrix& T) {
    const int n = T.order;
    MarkovReport r;
    r.column_sums.assign(static_cast<std::size_t>(n), Rational(0));
    bool nonneg = true;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const Rational& e = T.at(i, j);
            if (e < Rational(0)) nonneg = false;
            r.column_sums[static_cast<std::size_t>(j)] += e;
        }
    r.is_stochastic =
        nonneg && std::all_of(r.column_sums.begin(), r.column_sums.end(),
                              [](const Rational& s) { return s == Rational(1); });

    // Transition digraph: edge j -> i whenever T(i, j) != 0.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n)),
        radj(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (!T.at(i, j).is_zero()) {
                adj[static_cast<std::size_t>(j)].push_back(i);
                radj[static_cast<std::size_t>(i)].push_back(j);
            }
    const std::vector<int> fwd = reachable(adj, 0), bwd = reachable(radj, 0);
    r.is_irreducible =
        std::all_of(fwd.begin(), fwd.end(), [](int x) { return x; }) &&
        std::all_of(bwd.begin(), bwd.end(), [](int x) { return x; });

    // Cycle-length gcd: every cycle lives inside one strongly connected
    // component; within a component the gcd equals gcd over edges u->v of
    // level[u] + 1 - level[v] for BFS levels from any root.
    const std::vector<int> label = scc_labels(adj, radj);
    long long g = 0;
    const int comps = *std::max_element(label.begin(), label.end()) + 1;
    for (int c = 0; c < comps; ++c) {
        int root = -1;
        for (int u = 0; u < n; ++u)
            if (label[static_cast<std::size_t>(u)] == c) { root = u; break; }
        std::vector<long long> level(static_cast<std::size_t>(n), -1);
        std::queue<int> q;
        q.push(root);
        level[static_cast<std::size_t>(root)] = 0;
        long long cg = 0;
        bool has_edge = false;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (label[static_cast<std::size_t>(v)] != c) continue;
                has_edge = true;
                if (level[static_cast<std::size_t>(v)] == -1) {
                    level[static_cast<std::size_t>(v)] =
                        level[static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                } else {
                    cg = std::gcd(cg, level[static_cast<std::size_t>(u)] + 1 -
                                          level[static_cast<std::size_t>(v)]);
                }
            }
        }
        if (has_edge) g = std::gcd(g, cg);
    }
    r.is_aperiodic = (g == 1);
    return r;
}

std::vector<std::pair<int, bool>> condition_e_sweep(FilterKind kind, int max_m) {
    if (max_m < 1 || max_m > 255)
        throw std::invalid_argument("sweep bound must be in [1, 255]");
    if (kind != FilterKind::TypeI && kind != FilterKind::TypeII)
        throw std::invalid_argument("sweep supports the TypeI and TypeII families");
    std::vector<std::pair<int, bool>> out;
    for (int m = 1; m <= max_m; m += 2) {
        const FilterTaps taps =
            (kind == FilterKind::TypeI) ? make_type1(m) : make_type2(m);
        try {
            out.emplace_back(m, spectrum(transition_matrix(taps)).satisfies_condition_e);
        } catch (const ComputationError& e) {
            throw ComputationError(std::string(e.what()) + " (at order m=" +
                                   std::to_string(m) + ")");
        }
    }
    return out;
}

}  // namespace chebwav
