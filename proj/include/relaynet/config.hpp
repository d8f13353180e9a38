#ifndef RELAYNET_CONFIG_HPP
#define RELAYNET_CONFIG_HPP

#include <cstdint>
#include <vector>

#include "relaynet/units.hpp"

namespace relaynet {

// Scenario parameters for a multi-user multi-hop relay network: n_pairs
// source-destination pairs communicate over n_hops hops, assisted by one
// decode-and-forward relay stage between consecutive hops. All nodes of a
// layer sit at equally spaced points on a line, so every link of hop l has
// length total_distance_km / n_hops.
//
// Immutable after validate()/pad_dummy_relays(); safe to share read-only
// across concurrent Monte-Carlo workers.
struct NetworkConfig {
    int n_pairs = 1;                     // S-D pairs
    std::vector<int> relays_per_hop;     // per relay stage; one entry means uniform
    int n_hops = 2;                      // hops (relay stages = n_hops - 1)
    double total_distance_km = 1.0;      // source-to-destination distance
    double path_loss_exponent = 3.6;
    double shadowing_std_db = 8.0;       // log-normal shadowing, dB domain
    double tx_power_dbm = 30.0;          // per-node transmit power
    double noise_power_dbm = -100.0;     // receiver noise power
    std::vector<double> sinr_thresholds; // per-user, linear scale
    bool interference_enabled = true;    // intra-hop interference term
    bool shadowing_enabled = true;

    // Filled by pad_dummy_relays(): every stage is brought up to
    // padded_relays relays; dummy_mask[stage][relay] marks the zero-gain
    // placeholders that equalize the per-stage counts.
    int padded_relays = 0;
    std::vector<std::vector<std::uint8_t>> dummy_mask;

    int relay_stages() const { return n_hops - 1; }
    bool padded() const { return padded_relays > 0; }
    double hop_distance_km() const { return total_distance_km / n_hops; }
    double tx_power_w() const { return dbm_to_watt(tx_power_dbm); }
    double noise_power_w() const { return dbm_to_watt(noise_power_dbm); }

    // Usable (non-dummy) relays in a stage.
    int real_relays(int stage) const { return relays_per_hop[stage]; }
};

// Normalizes a config (uniform relay count expanded per stage, default
// thresholds filled in) and checks the scenario invariants. Throws SimError
// with Errc::NonPositiveParameter, Errc::TooFewRelays,
// Errc::ThresholdCountMismatch or Errc::ShapeMismatch. Idempotent.
NetworkConfig validate(NetworkConfig config);

// Equalizes per-stage relay counts by adding zero-gain dummy relays until
// every stage has max(relays_per_hop) relays, recording them in dummy_mask.
// Idempotent; expects a validated config.
NetworkConfig pad_dummy_relays(NetworkConfig config);

// validate + pad_dummy_relays in one step.
NetworkConfig prepare(NetworkConfig config);

} // namespace relaynet

#endif
