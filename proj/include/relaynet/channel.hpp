#ifndef RELAYNET_CHANNEL_HPP
#define RELAYNET_CHANNEL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "relaynet/config.hpp"
#include "relaynet/matrix.hpp"

namespace relaynet {

// Link attenuations (path loss x shadowing, linear power scale), one matrix
// per hop. Hop h has shape T x R with T = n_pairs for the first hop and
// padded_relays otherwise, R = n_pairs for the last hop and padded_relays
// otherwise. Fixed for the duration of a simulation run; entries touching a
// dummy relay are exactly zero.
struct LargeScaleRealization {
    std::vector<Matrix> hops;
};

// Squared channel-gain magnitudes per hop for one time slot: each entry is
// its attenuation times a fresh unit-mean exponential fade.
struct ChannelRealization {
    std::vector<Matrix> hops;
};

// attenuation = d^(-alpha) * S with d the per-hop distance in km and S the
// log-normal shadowing factor (1 when shadowing is disabled). Deterministic
// given (seed, realization); stream (seed, LargeScale, realization).
LargeScaleRealization sample_large_scale(const NetworkConfig& config, std::uint64_t seed,
                                         std::uint64_t realization = 0);

// One block-fading slot: gain = attenuation * Exp(1), i.i.d. across links and
// slots. Deterministic given (seed, slot); stream (seed, SmallScale, slot).
ChannelRealization sample_small_scale(const LargeScaleRealization& large, const NetworkConfig& config,
                                      std::uint64_t seed, std::uint64_t slot);

// Received SINR of one user on one hop, normalized by the user's threshold:
//   desired / (noise + sum of same-hop interferers)   / threshold(user)
// with desired = P * gain[tx(user), rx(user)] and interferers
// P * gain[tx(j), rx(user)], j != user (dropped when interference is off).
inline double normalized_link_sinr(const Matrix& gains, std::span<const int> tx, std::span<const int> rx,
                                   int user, double tx_power_w, double noise_w, bool interference,
                                   std::span<const double> thresholds) {
    const double desired = tx_power_w * gains.at(tx[user], rx[user]);
    double denom = noise_w;
    if (interference) {
        const int n = static_cast<int>(tx.size());
        for (int j = 0; j < n; ++j)
            if (j != user)
                denom += tx_power_w * gains.at(tx[j], rx[user]);
    }
    return (desired / denom) / thresholds[user];
}

// Same arithmetic on a matrix whose entries were pre-multiplied by the
// transmit power; used by the branch-weight kernels.
inline double normalized_link_sinr_scaled(const Matrix& power_gains, std::span<const int> tx,
                                          std::span<const int> rx, int user, double noise_w,
                                          bool interference, std::span<const double> thresholds) {
    const double desired = power_gains.at(tx[user], rx[user]);
    double denom = noise_w;
    if (interference) {
        const int n = static_cast<int>(tx.size());
        for (int j = 0; j < n; ++j)
            if (j != user)
                denom += power_gains.at(tx[j], rx[user]);
    }
    return (desired / denom) / thresholds[user];
}

// Normalized per-user SINR vector for one hop, given the transmitter and
// receiver node assignments (sources/destinations are the identity
// assignment 0..n_pairs-1 on the boundary hops).
std::vector<double> hop_sinr(const Matrix& gains, std::span<const int> tx, std::span<const int> rx,
                             const NetworkConfig& config);

// End-to-end normalized SINR per user for a full relay path given as one
// relay index per user per stage; the per-user value is the minimum of its
// per-hop SINRs.
std::vector<double> end_to_end_sinr(const ChannelRealization& realization,
                                    const std::vector<std::vector<int>>& relays_per_stage,
                                    const NetworkConfig& config);

} // namespace relaynet

#endif
