#include "relaynet/reference.hpp"

namespace relaynet {

BranchWeights build_branch_weights_reference(const ChannelRealization& realization,
                                             std::span<const StateSpace> spaces,
                                             const NetworkConfig& config) {
    const int hops = config.n_hops;
    std::vector<int> identity(config.n_pairs);
    for (int i = 0; i < config.n_pairs; ++i)
        identity[i] = i;

    BranchWeights weights;
    weights.hop.resize(hops);
    for (int h = 0; h < hops; ++h) {
        const int n_to = (h == hops - 1) ? 1 : spaces[h].count();
        const int n_from = (h == 0) ? 1 : spaces[h - 1].count();
        StageWeights& stage = weights.hop[h];
        stage = StageWeights(n_to, n_from);
        for (int to = 0; to < n_to; ++to) {
            for (int from = 0; from < n_from; ++from) {
                std::span<const int> tx = (h == 0) ? std::span<const int>(identity)
                                                   : spaces[h - 1].state(from);
                std::span<const int> rx = (h == hops - 1) ? std::span<const int>(identity)
                                                          : spaces[h].state(to);
                stage.at(to, from) = branch_weight(realization.hops[h], tx, rx, config);
            }
        }
    }
    return weights;
}

DpResult dp_solve_reference(const BranchWeights& weights) {
    if (!weights.consistent())
        throw SimError(Errc::ShapeMismatch, "branch-weight tensor stages do not chain");
    const int hops = weights.hops();
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
    for (int h = 1; h < hops; ++h) {
        const std::vector<double>& prev = tables.value[h - 1];
        const int n_to = (h == hops - 1) ? 1 : weights.states(h);
        std::vector<double> value(n_to);
        std::vector<int> pred(n_to);
        for (int to = 0; to < n_to; ++to) {
            double best = -std::numeric_limits<double>::infinity();
            int arg = 0;
            for (std::size_t from = 0; from < prev.size(); ++from) {
                ++comparisons;
                double cand = std::min(weights.entry(h, to, static_cast<int>(from)), prev[from]);
                if (cand > best) {
                    best = cand;
                    arg = static_cast<int>(from);
                }
            }
            value[to] = best;
            pred[to] = arg;
        }
        if (h == hops - 1) {
            tables.final_value = value[0];
            tables.final_pred = pred[0];
        } else {
            tables.value[h] = std::move(value);
            tables.pred[h] = std::move(pred);
        }
    }
    tables.comparison_count = comparisons;

    DpResult result;
    result.tables = std::move(tables);
    result.assignment.path = backtrack(result.tables);
    result.assignment.value = result.tables.final_value;
    result.assignment.comparisons = result.tables.comparison_count;
    return result;
}

} // namespace relaynet
