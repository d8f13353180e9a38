#ifndef RELAYNET_TRELLIS_HPP
#define RELAYNET_TRELLIS_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "relaynet/channel.hpp"
#include "relaynet/config.hpp"
#include "relaynet/exec.hpp"

namespace relaynet {

// All ordered injective assignments of n_users users to distinct non-dummy
// relays of one stage, enumerated in lexicographic order. A state is the
// relay index of each user; the lexicographic order fixes state identities
// across runs, so index z always means the same assignment.
class StateSpace {
  public:
    StateSpace() = default;

    int users() const { return n_users_; }
    int relays() const { return n_relays_; }
    int count() const { return n_users_ == 0 ? 0 : static_cast<int>(flat_.size()) / n_users_; }

    std::span<const int> state(int z) const {
        return {flat_.data() + static_cast<std::size_t>(z) * n_users_, static_cast<std::size_t>(n_users_)};
    }

    // Usable (non-dummy) relay indices, ascending.
    std::span<const int> allowed() const { return allowed_; }

    // Lexicographic rank of an assignment; -1 if it is not a valid state.
    int index_of(std::span<const int> assignment) const;

    friend StateSpace enumerate_states(int n_users, int n_relays, std::span<const std::uint8_t> dummy_mask);

  private:
    int n_users_ = 0;
    int n_relays_ = 0;
    std::vector<int> allowed_; // usable relay indices, ascending
    std::vector<int> flat_;    // count() * n_users_ relay indices
};

// Enumerates the Z = (M' choose n_users ordered) = prod_{i<n_users}(M'-i)
// states of a stage with M' usable relays. Throws Errc::TooFewRelays when
// fewer usable relays than users remain.
StateSpace enumerate_states(int n_users, int n_relays, std::span<const std::uint8_t> dummy_mask = {});

// One state space per relay stage (dummy relays excluded per stage).
std::vector<StateSpace> make_stage_spaces(const NetworkConfig& config);

// Weights of one hop: at(to, from) is the minimum normalized per-user SINR
// over the n_users links crossing that hop when the stage ahead of it uses
// state `from` and the stage after it uses state `to`. Boundary hops have a
// single fixed source/destination combination on one side.
struct StageWeights {
    int n_to = 0;
    int n_from = 0;
    std::vector<double> w; // row-major in `to`, contiguous in `from`

    StageWeights() = default;
    StageWeights(int to, int from)
        : n_to(to), n_from(from), w(static_cast<std::size_t>(to) * from, 0.0) {}

    double& at(int to, int from) { return w[static_cast<std::size_t>(to) * n_from + from]; }
    double at(int to, int from) const { return w[static_cast<std::size_t>(to) * n_from + from]; }
};

// The full branch-weight tensor: one StageWeights per hop.
struct BranchWeights {
    std::vector<StageWeights> hop;

    int hops() const { return static_cast<int>(hop.size()); }
    int states(int stage) const { return hop[stage].n_to; } // relay stage 0..hops-2
    double entry(int h, int to, int from) const { return hop[h].at(to, from); }

    bool consistent() const {
        if (hop.size() < 2 || hop.front().n_from != 1 || hop.back().n_to != 1)
            return false;
        for (std::size_t h = 1; h < hop.size(); ++h)
            if (hop[h].n_from != hop[h - 1].n_to)
                return false;
        return true;
    }
};

// Minimum over users of the normalized hop SINR between two assignments;
// this is the aggregation that restores the Markov structure of the trellis.
double branch_weight(const Matrix& gains, std::span<const int> tx, std::span<const int> rx,
                     const NetworkConfig& config);

// Materializes the whole tensor. Entries are independent, so the parallel
// policy fills stages with OpenMP and matches the serial fill bit for bit.
BranchWeights build_branch_weights(const ChannelRealization& realization,
                                   std::span<const StateSpace> spaces, const NetworkConfig& config,
                                   Exec exec = Exec::Parallel);

// Branch-weight source that computes entries on demand instead of holding
// the Z^2 stage matrices; lets the solver stream large state spaces and
// skip entries its short-circuit never reads.
class LazyBranchWeights {
  public:
    LazyBranchWeights(const ChannelRealization& realization, std::span<const StateSpace> spaces,
                      const NetworkConfig& config);

    int hops() const { return static_cast<int>(power_gains_.size()); }
    int states(int stage) const { return spaces_[stage].count(); }

    double entry(int h, int to, int from) const {
        const int last = hops() - 1;
        std::span<const int> tx = (h == 0) ? identity() : spaces_[h - 1].state(from);
        std::span<const int> rx = (h == last) ? identity() : spaces_[h].state(to);
        const Matrix& pg = power_gains_[h];
        double weight = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n_users_; ++i) {
            double s = normalized_link_sinr_scaled(pg, tx, rx, i, noise_w_, interference_, thresholds_);
            weight = std::min(weight, s);
        }
        return weight;
    }

  private:
    std::span<const int> identity() const { return {identity_.data(), identity_.size()}; }

    std::vector<Matrix> power_gains_; // per hop, gains pre-multiplied by tx power
    std::span<const StateSpace> spaces_;
    std::vector<int> identity_;
    std::vector<double> thresholds_storage_;
    std::span<const double> thresholds_;
    double noise_w_ = 0.0;
    bool interference_ = true;
    int n_users_ = 0;
};

// Relay indices per stage for a path of state indices.
std::vector<std::vector<int>> decode_path(std::span<const StateSpace> spaces, std::span<const int> path);

} // namespace relaynet

#endif
