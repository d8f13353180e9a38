#ifndef RELAYNET_BASELINES_HPP
#define RELAYNET_BASELINES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relaynet/dp.hpp"
#include "relaynet/trellis.hpp"

namespace relaynet {

// Number of distinct trellis paths (product of per-stage state counts).
template <WeightSource W>
std::uint64_t path_count(const W& weights) {
    std::uint64_t paths = 1;
    for (int s = 0; s < weights.hops() - 1; ++s) {
        std::uint64_t z = static_cast<std::uint64_t>(weights.states(s));
        if (paths > UINT64_MAX / z)
            return UINT64_MAX;
        paths *= z;
    }
    return paths;
}

namespace detail {

template <WeightSource W>
void exhaustive_dfs(const W& weights, int stage, double prefix_min, std::vector<int>& partial,
                    RelayAssignment& best, std::uint64_t& comparisons) {
    const int stages = weights.hops() - 1;
    const int n = weights.states(stage);
    for (int z = 0; z < n; ++z) {
        const double w = (stage == 0) ? weights.entry(0, z, 0) : weights.entry(stage, z, partial[stage - 1]);
        const double m = (stage == 0) ? w : std::min(prefix_min, w);
        ++comparisons;
        partial[stage] = z;
        if (stage == stages - 1) {
            const double full = std::min(m, weights.entry(stages, 0, z));
            ++comparisons;
            if (full > best.value) { // strict: ties keep the earlier, lexicographically smaller path
                best.value = full;
                best.path = partial;
            }
        } else {
            exhaustive_dfs(weights, stage + 1, m, partial, best, comparisons);
        }
    }
}

} // namespace detail

// Enumerates every trellis path and returns the exact max-min path; ties
// resolve to the lexicographically smallest state sequence. The oracle the
// dynamic program is checked against. Throws Errc::BudgetExceeded when the
// path count exceeds max_paths.
template <WeightSource W>
RelayAssignment exhaustive_search(const W& weights, std::uint64_t max_paths = 2'000'000) {
    const std::uint64_t paths = path_count(weights);
    if (paths > max_paths)
        throw SimError(Errc::BudgetExceeded, "exhaustive search over " + std::to_string(paths) +
                                                 " paths exceeds budget " + std::to_string(max_paths));
    RelayAssignment best;
    best.value = -std::numeric_limits<double>::infinity();
    std::vector<int> partial(weights.hops() - 1, 0);
    std::uint64_t comparisons = 0;
    detail::exhaustive_dfs(weights, 0, 0.0, partial, best, comparisons);
    best.comparisons = comparisons;
    return best;
}

// Greedy selection: users in index order each run a single-user bottleneck
// search over the relays not yet claimed, planning with interference-free
// link SNRs; claimed relays leave the pool stage by stage.
RelayAssignment greedy_select(const ChannelRealization& realization, std::span<const StateSpace> spaces,
                              const NetworkConfig& config);

// Myopic per-stage greedy: stage by stage, users in index order claim the
// free relay with the strongest link from their previously assigned node.
RelayAssignment hop_by_hop_greedy(const ChannelRealization& realization,
                                  std::span<const StateSpace> spaces, const NetworkConfig& config);

// DRS-like decentralized selection: every stage except the last picks the
// state with the best min-over-users SINR of its incoming hop given the
// previous choice; the last stage is picked jointly over the final two hops.
// Reconstruction of a scheme the literature describes only at a high level;
// reported as "drs" with no fidelity claim beyond that description.
RelayAssignment decentralized_rs(const ChannelRealization& realization,
                                 std::span<const StateSpace> spaces, const NetworkConfig& config);

// Recomputes per_user_sinr and value of an assignment from its relay path
// under the configured interference model. All selectors report this
// consistent evaluation, which makes per-slot dominance of the optimum over
// the baselines exact rather than approximate.
void finalize_assignment(RelayAssignment& assignment, const ChannelRealization& realization,
                         std::span<const StateSpace> spaces, const NetworkConfig& config);

enum class Scheme { Optimal, Exhaustive, Greedy, HopGreedy, Drs };

std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> scheme_from_name(std::string_view name);
std::vector<Scheme> default_schemes(); // optimal + the three sub-optimal selectors

struct SelectorOptions {
    std::uint64_t exhaustive_budget = 2'000'000;
    Exec exec = Exec::Parallel;
};

// Runs one selector on one channel realization and returns its finalized
// assignment (per-user SINRs and value re-evaluated from the path).
RelayAssignment run_scheme(Scheme scheme, const ChannelRealization& realization,
                           std::span<const StateSpace> spaces, const NetworkConfig& config,
                           const SelectorOptions& options = {});

} // namespace relaynet

#endif
