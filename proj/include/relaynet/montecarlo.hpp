#ifndef RELAYNET_MONTECARLO_HPP
#define RELAYNET_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "relaynet/baselines.hpp"
#include "relaynet/config.hpp"

namespace relaynet {

struct OutageEstimate {
    std::string scheme;
    long trials = 0;
    long outage_count = 0;
    double probability = 0.0;
    double ci_low = 0.0;  // 95% Wilson interval
    double ci_high = 0.0;
    double mean_time_ms = 0.0; // selector invocation only, wall clock
    double mean_comparisons = 0.0;
};

// 95% Wilson score interval for outage_count successes in trials draws.
std::pair<double, double> wilson_interval(long outage_count, long trials);

// Network outage: some user's end-to-end normalized SINR fell below 1.
bool is_outage(const RelayAssignment& assignment);

struct McOptions {
    long n_slots = 10000;
    std::uint64_t seed = 1;
    int n_threads = 0; // 0 = OpenMP default
    std::uint64_t exhaustive_budget = 2'000'000;
    int n_large_scale = 1;     // independent large-scale realizations per run
    bool record_values = false; // keep every slot's achieved value per scheme
};

struct McResult {
    std::vector<OutageEstimate> estimates;           // one per scheme, input order
    std::vector<std::vector<double>> slot_values;    // [scheme][slot] when recorded
};

// Runs every scheme on the same channel realizations: one large-scale
// realization per run (fixed for all slots), a fresh small-scale realization
// per slot. Outage and comparison counts are reduced order-independently, so
// they are identical for any seed-matched run regardless of thread count;
// timing is the only non-deterministic output.
McResult estimate_outage(const NetworkConfig& config, const std::vector<Scheme>& schemes,
                         const McOptions& options);

enum class SweepAxis { TxPowerDbm, Hops, Relays, Pairs };

std::string_view axis_name(SweepAxis axis);

struct SweepRow {
    double axis_value = 0.0;
    OutageEstimate estimate;
};

// Repeats estimate_outage along one scenario axis. The seed is held fixed:
// transmit-power sweeps therefore reuse the identical large-scale
// realization, while hop/relay/pair sweeps resample it (the shapes change).
std::vector<SweepRow> sweep(const NetworkConfig& base, SweepAxis axis, const std::vector<double>& values,
                            const std::vector<Scheme>& schemes, const McOptions& options);

} // namespace relaynet

#endif
