#include "relaynet/trellis.hpp"

#include <algorithm>
#include <string>

#include "relaynet/error.hpp"

namespace relaynet {

namespace {

void emit_states(const std::vector<int>& allowed, int n_users, std::vector<int>& prefix,
                 std::vector<bool>& used, std::vector<int>& out) {
    if (static_cast<int>(prefix.size()) == n_users) {
        out.insert(out.end(), prefix.begin(), prefix.end());
        return;
    }
    for (std::size_t k = 0; k < allowed.size(); ++k) {
        if (used[k])
            continue;
        used[k] = true;
        prefix.push_back(allowed[k]);
        emit_states(allowed, n_users, prefix, used, out);
        prefix.pop_back();
        used[k] = false;
    }
}

} // namespace

int StateSpace::index_of(std::span<const int> assignment) const {
    if (static_cast<int>(assignment.size()) != n_users_)
        return -1;
    std::vector<int> remaining = allowed_;
    int index = 0;
    int choices = static_cast<int>(remaining.size());
    for (int i = 0; i < n_users_; ++i) {
        auto it = std::find(remaining.begin(), remaining.end(), assignment[i]);
        if (it == remaining.end())
            return -1;
        int pos = static_cast<int>(it - remaining.begin());
        // completions per choice at this position
        int suffix = 1;
        for (int k = i + 1; k < n_users_; ++k)
            suffix *= choices - k;
        index += pos * suffix;
        remaining.erase(it);
    }
    return index;
}

StateSpace enumerate_states(int n_users, int n_relays, std::span<const std::uint8_t> dummy_mask) {
    if (n_users < 1)
        throw SimError(Errc::NonPositiveParameter, "n_users must be at least 1");

    StateSpace space;
    space.n_users_ = n_users;
    space.n_relays_ = n_relays;
    for (int r = 0; r < n_relays; ++r)
        if (static_cast<std::size_t>(r) >= dummy_mask.size() || !dummy_mask[r])
            space.allowed_.push_back(r);

    const int usable = static_cast<int>(space.allowed_.size());
    if (usable < n_users)
        throw SimError(Errc::TooFewRelays, "stage has " + std::to_string(usable) +
                                               " usable relays for " + std::to_string(n_users) +
                                               " users");

    std::size_t count = 1;
    for (int i = 0; i < n_users; ++i)
        count *= static_cast<std::size_t>(usable - i);
    space.flat_.reserve(count * n_users);

    std::vector<int> prefix;
    std::vector<bool> used(space.allowed_.size(), false);
    emit_states(space.allowed_, n_users, prefix, used, space.flat_);
    return space;
}

std::vector<StateSpace> make_stage_spaces(const NetworkConfig& config) {
    if (!config.padded())
        throw SimError(Errc::ShapeMismatch, "config must be prepared before building stage spaces");
    std::vector<StateSpace> spaces;
    spaces.reserve(config.relay_stages());
    StateSpace uniform; // stages without dummies share one enumeration
    bool have_uniform = false;
    for (int s = 0; s < config.relay_stages(); ++s) {
        const auto& mask = config.dummy_mask[s];
        bool any_dummy = std::find(mask.begin(), mask.end(), std::uint8_t{1}) != mask.end();
        if (!any_dummy) {
            if (!have_uniform) {
                uniform = enumerate_states(config.n_pairs, config.padded_relays);
                have_uniform = true;
            }
            spaces.push_back(uniform);
        } else {
            spaces.push_back(enumerate_states(config.n_pairs, config.padded_relays, mask));
        }
    }
    return spaces;
}

double branch_weight(const Matrix& gains, std::span<const int> tx, std::span<const int> rx,
                     const NetworkConfig& config) {
    const double p = config.tx_power_w();
    const double noise = config.noise_power_w();
    double weight = std::numeric_limits<double>::infinity();
    for (int i = 0; i < config.n_pairs; ++i) {
        double s = normalized_link_sinr(gains, tx, rx, i, p, noise, config.interference_enabled,
                                        config.sinr_thresholds);
        weight = std::min(weight, s);
    }
    return weight;
}

LazyBranchWeights::LazyBranchWeights(const ChannelRealization& realization,
                                     std::span<const StateSpace> spaces, const NetworkConfig& config)
    : spaces_(spaces),
      thresholds_storage_(config.sinr_thresholds),
      noise_w_(config.noise_power_w()),
      interference_(config.interference_enabled),
      n_users_(config.n_pairs) {
    if (static_cast<int>(spaces.size()) != config.relay_stages())
        throw SimError(Errc::ShapeMismatch, "need one state space per relay stage");
    thresholds_ = thresholds_storage_;
    identity_.resize(config.n_pairs);
    for (int i = 0; i < config.n_pairs; ++i)
        identity_[i] = i;
    const double p = config.tx_power_w();
    power_gains_.reserve(realization.hops.size());
    for (const Matrix& g : realization.hops) {
        Matrix pg(g.rows, g.cols);
        for (std::size_t k = 0; k < g.data.size(); ++k)
            pg.data[k] = p * g.data[k];
        power_gains_.push_back(std::move(pg));
    }
}

BranchWeights build_branch_weights(const ChannelRealization& realization,
                                   std::span<const StateSpace> spaces, const NetworkConfig& config,
                                   Exec exec) {
    if (realization.hops.size() != static_cast<std::size_t>(config.n_hops))
        throw SimError(Errc::ShapeMismatch, "realization does not match config hop count");
    for (std::size_t h = 0; h < realization.hops.size(); ++h) {
        const Matrix& g = realization.hops[h];
        const int want_rows = (h == 0) ? config.n_pairs : config.padded_relays;
        const int want_cols = (h + 1 == realization.hops.size()) ? config.n_pairs : config.padded_relays;
        if (g.rows != want_rows || g.cols != want_cols)
            throw SimError(Errc::ShapeMismatch, "hop " + std::to_string(h) + " gain matrix has wrong shape");
    }

    const LazyBranchWeights lazy(realization, spaces, config);
    const int hops = config.n_hops;

    BranchWeights weights;
    weights.hop.resize(hops);
    for (int h = 0; h < hops; ++h) {
        const int n_to = (h == hops - 1) ? 1 : spaces[h].count();
        const int n_from = (h == 0) ? 1 : spaces[h - 1].count();
        StageWeights& stage = weights.hop[h];
        stage = StageWeights(n_to, n_from);
        const std::int64_t total = static_cast<std::int64_t>(n_to) * n_from;
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
            for (std::int64_t k = 0; k < total; ++k)
                stage.w[k] = lazy.entry(h, static_cast<int>(k / n_from), static_cast<int>(k % n_from));
        } else {
            for (std::int64_t k = 0; k < total; ++k)
                stage.w[k] = lazy.entry(h, static_cast<int>(k / n_from), static_cast<int>(k % n_from));
        }
    }
    return weights;
}

std::vector<std::vector<int>> decode_path(std::span<const StateSpace> spaces, std::span<const int> path) {
    if (spaces.size() != path.size())
        throw SimError(Errc::ShapeMismatch, "path length does not match stage count");
    std::vector<std::vector<int>> relays(path.size());
    for (std::size_t s = 0; s < path.size(); ++s) {
        auto st = spaces[s].state(path[s]);
        relays[s].assign(st.begin(), st.end());
    }
    return relays;
}

} // namespace relaynet
