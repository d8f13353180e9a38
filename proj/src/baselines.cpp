#include "relaynet/baselines.hpp"

#include <algorithm>
#include <limits>

#include "relaynet/error.hpp"

namespace relaynet {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

double link_snr(const Matrix& gains, int tx, int rx, double p, double noise) {
    return p * gains.at(tx, rx) / noise;
}

std::vector<int> free_relays(const StateSpace& space, const std::vector<std::uint8_t>& claimed) {
    std::vector<int> out;
    for (int r : space.allowed())
        if (!claimed[r])
            out.push_back(r);
    return out;
}

int state_index_or_throw(const StateSpace& space, std::span<const int> assignment) {
    int z = space.index_of(assignment);
    if (z < 0)
        throw SimError(Errc::ShapeMismatch, "assignment is not a valid state");
    return z;
}

} // namespace

void finalize_assignment(RelayAssignment& assignment, const ChannelRealization& realization,
                         std::span<const StateSpace> spaces, const NetworkConfig& config) {
    const auto relays = decode_path(spaces, assignment.path);
    assignment.per_user_sinr = end_to_end_sinr(realization, relays, config);
    assignment.value = *std::min_element(assignment.per_user_sinr.begin(), assignment.per_user_sinr.end());
}

RelayAssignment greedy_select(const ChannelRealization& realization, std::span<const StateSpace> spaces,
                              const NetworkConfig& config) {
    const int stages = config.relay_stages();
    const int n = config.n_pairs;
    const double p = config.tx_power_w();
    const double noise = config.noise_power_w();

    std::vector<std::vector<std::uint8_t>> claimed(stages,
                                                   std::vector<std::uint8_t>(config.padded_relays, 0));
    std::vector<std::vector<int>> chosen(stages, std::vector<int>(n, -1));
    std::uint64_t comparisons = 0;

    for (int user = 0; user < n; ++user) {
        // Residual pool per stage, ascending so ties go to the lowest index.
        std::vector<std::vector<int>> pool(stages);
        for (int s = 0; s < stages; ++s) {
            pool[s] = free_relays(spaces[s], claimed[s]);
            if (pool[s].empty())
                throw SimError(Errc::InfeasibleResidual,
                               "no free relay left in stage " + std::to_string(s));
        }

        // Single-user bottleneck recursion over the residual pool,
        // interference-free planning metric.
        std::vector<double> best(pool[0].size());
        std::vector<std::vector<int>> pred(stages);
        for (std::size_t j = 0; j < pool[0].size(); ++j)
            best[j] = link_snr(realization.hops[0], user, pool[0][j], p, noise);
        for (int s = 1; s < stages; ++s) {
            std::vector<double> next(pool[s].size(), neg_inf);
            pred[s].assign(pool[s].size(), 0);
            for (std::size_t j = 0; j < pool[s].size(); ++j) {
                for (std::size_t i = 0; i < pool[s - 1].size(); ++i) {
                    ++comparisons;
                    double cand = std::min(best[i],
                                           link_snr(realization.hops[s], pool[s - 1][i], pool[s][j], p, noise));
                    if (cand > next[j]) {
                        next[j] = cand;
                        pred[s][j] = static_cast<int>(i);
                    }
                }
            }
            best = std::move(next);
        }
        double path_best = neg_inf;
        int last = 0;
        for (std::size_t j = 0; j < pool[stages - 1].size(); ++j) {
            ++comparisons;
            double cand = std::min(best[j], link_snr(realization.hops[stages], pool[stages - 1][j], user,
                                                     p, noise));
            if (cand > path_best) {
                path_best = cand;
                last = static_cast<int>(j);
            }
        }

        int at = last;
        for (int s = stages - 1; s >= 0; --s) {
            int relay = pool[s][at];
            chosen[s][user] = relay;
            claimed[s][relay] = 1;
            if (s > 0)
                at = pred[s][at];
        }
    }

    RelayAssignment assignment;
    assignment.path.resize(stages);
    for (int s = 0; s < stages; ++s)
        assignment.path[s] = state_index_or_throw(spaces[s], chosen[s]);
    assignment.comparisons = comparisons;
    finalize_assignment(assignment, realization, spaces, config);
    return assignment;
}

RelayAssignment hop_by_hop_greedy(const ChannelRealization& realization,
                                  std::span<const StateSpace> spaces, const NetworkConfig& config) {
    const int stages = config.relay_stages();
    const int n = config.n_pairs;
    const double p = config.tx_power_w();
    const double noise = config.noise_power_w();

    std::vector<int> prev(n);
    for (int i = 0; i < n; ++i)
        prev[i] = i;

    std::vector<std::vector<int>> chosen(stages, std::vector<int>(n, -1));
    std::uint64_t comparisons = 0;

    for (int s = 0; s < stages; ++s) {
        std::vector<std::uint8_t> claimed(config.padded_relays, 0);
        std::vector<int> next(n, -1);
        for (int i = 0; i < n; ++i) {
            double best = neg_inf;
            int best_relay = -1;
            for (int r : spaces[s].allowed()) {
                if (claimed[r])
                    continue;
                ++comparisons;
                double snr = link_snr(realization.hops[s], prev[i], r, p, noise);
                if (snr > best) {
                    best = snr;
                    best_relay = r;
                }
            }
            claimed[best_relay] = 1;
            next[i] = best_relay;
            chosen[s][i] = best_relay;
        }
        prev = std::move(next);
    }

    RelayAssignment assignment;
    assignment.path.resize(stages);
    for (int s = 0; s < stages; ++s)
        assignment.path[s] = state_index_or_throw(spaces[s], chosen[s]);
    assignment.comparisons = comparisons;
    finalize_assignment(assignment, realization, spaces, config);
    return assignment;
}

RelayAssignment decentralized_rs(const ChannelRealization& realization,
                                 std::span<const StateSpace> spaces, const NetworkConfig& config) {
    const int stages = config.relay_stages();
    const int n = config.n_pairs;

    std::vector<int> prev(n);
    for (int i = 0; i < n; ++i)
        prev[i] = i;

    RelayAssignment assignment;
    assignment.path.resize(stages);
    std::uint64_t comparisons = 0;

    // Every stage but the last: per-hop max-min given the previous choice.
    for (int s = 0; s + 1 < stages; ++s) {
        double best = neg_inf;
        int best_state = 0;
        for (int z = 0; z < spaces[s].count(); ++z) {
            ++comparisons;
            double w = branch_weight(realization.hops[s], prev, spaces[s].state(z), config);
            if (w > best) {
                best = w;
                best_state = z;
            }
        }
        assignment.path[s] = best_state;
        auto st = spaces[s].state(best_state);
        prev.assign(st.begin(), st.end());
    }

    // Last stage: the final two hops judged together.
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i)
        identity[i] = i;
    const int s = stages - 1;
    double best = neg_inf;
    int best_state = 0;
    for (int z = 0; z < spaces[s].count(); ++z) {
        ++comparisons;
        double w = std::min(branch_weight(realization.hops[s], prev, spaces[s].state(z), config),
                            branch_weight(realization.hops[s + 1], spaces[s].state(z), identity, config));
        if (w > best) {
            best = w;
            best_state = z;
        }
    }
    assignment.path[s] = best_state;

    assignment.comparisons = comparisons;
    finalize_assignment(assignment, realization, spaces, config);
    return assignment;
}

std::string_view scheme_name(Scheme scheme) {
    switch (scheme) {
    case Scheme::Optimal: return "optimal";
    case Scheme::Exhaustive: return "exhaustive";
    case Scheme::Greedy: return "greedy";
    case Scheme::HopGreedy: return "hop-greedy";
    case Scheme::Drs: return "drs";
    }
    return "unknown";
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
    for (Scheme s : {Scheme::Optimal, Scheme::Exhaustive, Scheme::Greedy, Scheme::HopGreedy, Scheme::Drs})
        if (name == scheme_name(s))
            return s;
    return std::nullopt;
}

std::vector<Scheme> default_schemes() {
    return {Scheme::Optimal, Scheme::Greedy, Scheme::HopGreedy, Scheme::Drs};
}

RelayAssignment run_scheme(Scheme scheme, const ChannelRealization& realization,
                           std::span<const StateSpace> spaces, const NetworkConfig& config,
                           const SelectorOptions& options) {
    switch (scheme) {
    case Scheme::Optimal: {
        LazyBranchWeights weights(realization, spaces, config);
        RelayAssignment assignment = dp_solve(weights, options.exec).assignment;
        finalize_assignment(assignment, realization, spaces, config);
        return assignment;
    }
    case Scheme::Exhaustive: {
        LazyBranchWeights weights(realization, spaces, config);
        RelayAssignment assignment = exhaustive_search(weights, options.exhaustive_budget);
        finalize_assignment(assignment, realization, spaces, config);
        return assignment;
    }
    case Scheme::Greedy:
        return greedy_select(realization, spaces, config);
    case Scheme::HopGreedy:
        return hop_by_hop_greedy(realization, spaces, config);
    case Scheme::Drs:
        return decentralized_rs(realization, spaces, config);
    }
    throw SimError(Errc::ShapeMismatch, "unknown scheme");
}

} // namespace relaynet
