#include "relaynet/channel.hpp"

#include <cmath>

#include "relaynet/error.hpp"
#include "relaynet/rng.hpp"

namespace relaynet {

namespace {

void hop_shape(const NetworkConfig& config, int hop, int& rows, int& cols) {
    rows = (hop == 0) ? config.n_pairs : config.padded_relays;
    cols = (hop == config.n_hops - 1) ? config.n_pairs : config.padded_relays;
}

bool tx_is_dummy(const NetworkConfig& config, int hop, int row) {
    return hop > 0 && config.dummy_mask[hop - 1][row];
}

bool rx_is_dummy(const NetworkConfig& config, int hop, int col) {
    return hop < config.n_hops - 1 && config.dummy_mask[hop][col];
}

} // namespace

LargeScaleRealization sample_large_scale(const NetworkConfig& config, std::uint64_t seed) {
    if (!config.padded())
        throw SimError(Errc::ShapeMismatch, "config must be prepared before sampling");

    const double base = std::pow(config.hop_distance_km(), -config.path_loss_exponent);
    Rng rng(seed, Rng::Stream::LargeScale);

    LargeScaleRealization large;
    large.hops.resize(config.n_hops);
    for (int h = 0; h < config.n_hops; ++h) {
        int rows = 0, cols = 0;
        hop_shape(config, h, rows, cols);
        Matrix& a = large.hops[h];
        a = Matrix(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                // Draw unconditionally to keep the stream layout independent
                // of the dummy mask.
                double shadow = 1.0;
                if (config.shadowing_enabled)
                    shadow = std::pow(10.0, config.shadowing_std_db * rng.normal() / 10.0);
                if (tx_is_dummy(config, h, r) || rx_is_dummy(config, h, c))
                    a.at(r, c) = 0.0;
                else
                    a.at(r, c) = base * shadow;
            }
        }
    }
    return large;
}

ChannelRealization sample_small_scale(const LargeScaleRealization& large, const NetworkConfig& config,
                                      std::uint64_t seed, std::uint64_t slot) {
    if (large.hops.size() != static_cast<std::size_t>(config.n_hops))
        throw SimError(Errc::ShapeMismatch, "large-scale realization does not match config");

    Rng rng(seed, Rng::Stream::SmallScale, slot);
    ChannelRealization ch;
    ch.hops.resize(large.hops.size());
    for (std::size_t h = 0; h < large.hops.size(); ++h) {
        const Matrix& a = large.hops[h];
        Matrix& g = ch.hops[h];
        g = Matrix(a.rows, a.cols);
        for (std::size_t k = 0; k < a.data.size(); ++k)
            g.data[k] = a.data[k] * rng.exponential();
    }
    return ch;
}

std::vector<double> hop_sinr(const Matrix& gains, std::span<const int> tx, std::span<const int> rx,
                             const NetworkConfig& config) {
    const double p = config.tx_power_w();
    const double noise = config.noise_power_w();
    std::vector<double> out(config.n_pairs);
    for (int i = 0; i < config.n_pairs; ++i)
        out[i] = normalized_link_sinr(gains, tx, rx, i, p, noise, config.interference_enabled,
                                      config.sinr_thresholds);
    return out;
}

std::vector<double> end_to_end_sinr(const ChannelRealization& realization,
                                    const std::vector<std::vector<int>>& relays_per_stage,
                                    const NetworkConfig& config) {
    const int hops = config.n_hops;
    if (static_cast<int>(relays_per_stage.size()) != hops - 1)
        throw SimError(Errc::ShapeMismatch, "need one relay assignment per stage");

    std::vector<int> identity(config.n_pairs);
    for (int i = 0; i < config.n_pairs; ++i)
        identity[i] = i;

    std::vector<double> best(config.n_pairs, 0.0);
    for (int h = 0; h < hops; ++h) {
        std::span<const int> tx = (h == 0) ? std::span<const int>(identity)
                                           : std::span<const int>(relays_per_stage[h - 1]);
        std::span<const int> rx = (h == hops - 1) ? std::span<const int>(identity)
                                                  : std::span<const int>(relays_per_stage[h]);
        std::vector<double> sinr = hop_sinr(realization.hops[h], tx, rx, config);
        for (int i = 0; i < config.n_pairs; ++i)
            best[i] = (h == 0) ? sinr[i] : std::min(best[i], sinr[i]);
    }
    return best;
}

} // namespace relaynet
