#include "relaynet/config.hpp"

#include <algorithm>
#include <string>

#include "relaynet/error.hpp"

namespace relaynet {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0))
        throw SimError(Errc::NonPositiveParameter, std::string(name) + " must be positive");
}

} // namespace

NetworkConfig validate(NetworkConfig config) {
    if (config.n_pairs < 1)
        throw SimError(Errc::NonPositiveParameter, "n_pairs must be at least 1");
    if (config.n_hops < 2)
        throw SimError(Errc::NonPositiveParameter, "n_hops must be at least 2");
    require_positive(config.total_distance_km, "total_distance_km");
    require_positive(config.path_loss_exponent, "path_loss_exponent");
    if (config.shadowing_std_db < 0.0)
        throw SimError(Errc::NonPositiveParameter, "shadowing_std_db must be nonnegative");

    const int stages = config.relay_stages();
    if (config.relays_per_hop.empty())
        throw SimError(Errc::NonPositiveParameter, "relays_per_hop must not be empty");
    if (config.relays_per_hop.size() == 1)
        config.relays_per_hop.assign(stages, config.relays_per_hop.front());
    if (static_cast<int>(config.relays_per_hop.size()) != stages)
        throw SimError(Errc::ShapeMismatch, "relays_per_hop must have one entry per relay stage (" +
                                                std::to_string(stages) + ")");
    for (int m : config.relays_per_hop)
        if (m < 1)
            throw SimError(Errc::NonPositiveParameter, "relay counts must be at least 1");

    const int max_relays = *std::max_element(config.relays_per_hop.begin(), config.relays_per_hop.end());
    if (max_relays < config.n_pairs)
        throw SimError(Errc::TooFewRelays, "need at least n_pairs relays in some hop; have " +
                                               std::to_string(max_relays) + " for " +
                                               std::to_string(config.n_pairs) + " pairs");

    if (config.sinr_thresholds.empty())
        config.sinr_thresholds.assign(config.n_pairs, 1.0);
    else if (config.sinr_thresholds.size() == 1)
        config.sinr_thresholds.assign(config.n_pairs, config.sinr_thresholds.front());
    if (static_cast<int>(config.sinr_thresholds.size()) != config.n_pairs)
        throw SimError(Errc::ThresholdCountMismatch,
                       "sinr_thresholds must have one entry per S-D pair");
    for (double th : config.sinr_thresholds)
        require_positive(th, "sinr_threshold");

    // A previous padding stays valid only if it still matches the counts.
    if (config.padded()) {
        bool consistent = config.padded_relays >= max_relays &&
                          static_cast<int>(config.dummy_mask.size()) == stages;
        if (!consistent) {
            config.padded_relays = 0;
            config.dummy_mask.clear();
        }
    }
    return config;
}

NetworkConfig pad_dummy_relays(NetworkConfig config) {
    config = validate(std::move(config));
    if (config.padded())
        return config;

    const int stages = config.relay_stages();
    const int max_relays = *std::max_element(config.relays_per_hop.begin(), config.relays_per_hop.end());
    config.padded_relays = max_relays;
    config.dummy_mask.assign(stages, std::vector<std::uint8_t>(max_relays, 0));
    for (int s = 0; s < stages; ++s)
        for (int r = config.relays_per_hop[s]; r < max_relays; ++r)
            config.dummy_mask[s][r] = 1;
    return config;
}

NetworkConfig prepare(NetworkConfig config) { return pad_dummy_relays(validate(std::move(config))); }

} // namespace relaynet
