#ifndef RELAYNET_DP_HPP
#define RELAYNET_DP_HPP

#include <concepts>
#include <cstdint>
#include <limits>
#include <vector>

#include "relaynet/error.hpp"
#include "relaynet/exec.hpp"

namespace relaynet {

template <class W>
concept WeightSource = requires(const W& w, int h, int to, int from) {
    { w.hops() } -> std::convertible_to<int>;
    { w.states(h) } -> std::convertible_to<int>;
    { w.entry(h, to, from) } -> std::convertible_to<double>;
};

// Forward-pass tables of the bottleneck recursion. value[s][z] is the best
// achievable minimum branch weight over all partial paths ending in state z
// of relay stage s; pred[s][z] the argmax predecessor (0 for the first
// stage). The destination stage collapses to a single state, kept as the
// final_* scalars, so the tables hold exactly 2 + 2 * Z * (hops - 1)
// elements for a uniform space of Z states.
struct DpTables {
    std::vector<std::vector<double>> value;
    std::vector<std::vector<int>> pred;
    double final_value = 0.0;
    int final_pred = 0;
    std::uint64_t comparison_count = 0;

    int hops() const { return static_cast<int>(value.size()) + 1; }
};

// A selected path through the trellis: one state index per relay stage, the
// achieved max-min normalized SINR, and the per-user end-to-end normalized
// SINRs of the selected relays (filled in by the selector front ends).
struct RelayAssignment {
    std::vector<int> path;
    double value = 0.0;
    std::vector<double> per_user_sinr;
    std::uint64_t comparisons = 0;
};

struct DpResult {
    RelayAssignment assignment;
    DpTables tables;
};

// Predecessor-scan count of the forward pass for a uniform space of Z
// states: Z for the single destination state plus Z^2 per interior stage.
inline std::uint64_t count_comparisons(std::uint64_t z, int hops) {
    return z + z * z * static_cast<std::uint64_t>(hops - 2);
}

// Walks the predecessor table from the destination back to the first relay
// stage and returns the optimum state per stage.
std::vector<int> backtrack(const DpTables& tables);

namespace detail {

struct Relax {
    double best = -std::numeric_limits<double>::infinity();
    int pred = 0;
};

// Best predecessor for one target state. Scans every predecessor (each scan
// step is one counted comparison); the branch weight itself is only fetched
// when the predecessor's running value could still win, which cannot change
// the outcome: min(w, u) <= u <= best, and ties keep the earlier index.
template <WeightSource W>
inline Relax relax_state(const W& weights, int h, int to, const std::vector<double>& prev) {
    Relax r;
    const int n_from = static_cast<int>(prev.size());
    for (int from = 0; from < n_from; ++from) {
        if (prev[from] <= r.best)
            continue;
        const double candidate = std::min(weights.entry(h, to, from), prev[from]);
        if (candidate > r.best) {
            r.best = candidate;
            r.pred = from;
        }
    }
    return r;
}

} // namespace detail

// Maximizes the minimum branch weight over all trellis paths. Forward
// recursion over stages with backtracking; ties at every argmax resolve to
// the lowest predecessor index, so the returned path is reproducible.
// comparison_count tallies one comparison per (target state, predecessor)
// pair scanned, i.e. Z + Z^2 * (hops - 2) on a uniform space.
template <WeightSource W>
DpResult dp_solve(const W& weights, Exec exec = Exec::Parallel) {
    if constexpr (requires { weights.consistent(); }) {
        if (!weights.consistent())
            throw SimError(Errc::ShapeMismatch, "branch-weight tensor stages do not chain");
    }
    const int hops = weights.hops();
    if (hops < 2)
        throw SimError(Errc::ShapeMismatch, "trellis needs at least two hops");
    for (int s = 0; s < hops - 1; ++s)
        if (weights.states(s) < 1)
            throw SimError(Errc::EmptyStateSpace, "relay stage without states");

    DpTables tables;
    tables.value.resize(hops - 1);
    tables.pred.resize(hops - 1);

    const int first = weights.states(0);
    tables.value[0].resize(first);
    tables.pred[0].assign(first, 0);
    for (int z = 0; z < first; ++z)
        tables.value[0][z] = weights.entry(0, z, 0);

    std::uint64_t comparisons = 0;
    for (int h = 1; h <= hops - 2; ++h) {
        const std::vector<double>& prev = tables.value[h - 1];
        const int n_to = weights.states(h);
        tables.value[h].resize(n_to);
        tables.pred[h].resize(n_to);
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
            for (int z = 0; z < n_to; ++z) {
                detail::Relax r = detail::relax_state(weights, h, z, prev);
                tables.value[h][z] = r.best;
                tables.pred[h][z] = r.pred;
            }
        } else {
            for (int z = 0; z < n_to; ++z) {
                detail::Relax r = detail::relax_state(weights, h, z, prev);
                tables.value[h][z] = r.best;
                tables.pred[h][z] = r.pred;
            }
        }
        comparisons += static_cast<std::uint64_t>(n_to) * prev.size();
    }

    detail::Relax last = detail::relax_state(weights, hops - 1, 0, tables.value[hops - 2]);
    tables.final_value = last.best;
    tables.final_pred = last.pred;
    comparisons += tables.value[hops - 2].size();
    tables.comparison_count = comparisons;

    DpResult result;
    result.tables = std::move(tables);
    result.assignment.path = backtrack(result.tables);
    result.assignment.value = result.tables.final_value;
    result.assignment.comparisons = result.tables.comparison_count;
    return result;
}

} // namespace relaynet

#endif
