#include "relaynet/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "relaynet/channel.hpp"
#include "relaynet/error.hpp"
#include "relaynet/trellis.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relaynet {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point t0, clock_type::time_point t1) {
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int resolve_threads(int requested) {
#ifdef _OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

} // namespace

std::pair<double, double> wilson_interval(long outage_count, long trials) {
    if (trials <= 0)
        return {0.0, 1.0};
    const double z = 1.959963984540054; // 97.5% normal quantile
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(outage_count) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

bool is_outage(const RelayAssignment& assignment) {
    if (!assignment.per_user_sinr.empty())
        return *std::min_element(assignment.per_user_sinr.begin(), assignment.per_user_sinr.end()) < 1.0;
    return assignment.value < 1.0;
}

McResult estimate_outage(const NetworkConfig& raw_config, const std::vector<Scheme>& schemes,
                         const McOptions& options) {
    if (options.n_slots < 1)
        throw SimError(Errc::NonPositiveParameter, "n_slots must be at least 1");
    if (schemes.empty())
        throw SimError(Errc::NonPositiveParameter, "need at least one scheme");

    const NetworkConfig config = prepare(raw_config);
    const std::vector<StateSpace> spaces = make_stage_spaces(config);
    const int n_schemes = static_cast<int>(schemes.size());
    const int threads = resolve_threads(options.n_threads);

    SelectorOptions selector;
    selector.exhaustive_budget = options.exhaustive_budget;
    selector.exec = threads > 1 ? Exec::Serial : Exec::Parallel; // slots carry the parallelism

    const long total_slots = options.n_slots * std::max(1, options.n_large_scale);

    std::vector<long> outage(n_schemes, 0);
    std::vector<double> time_ms(n_schemes, 0.0);
    std::vector<std::uint64_t> comparisons(n_schemes, 0);
    McResult result;
    if (options.record_values)
        result.slot_values.assign(n_schemes, std::vector<double>(total_slots, 0.0));

    for (int rep = 0; rep < std::max(1, options.n_large_scale); ++rep) {
        const LargeScaleRealization large = sample_large_scale(config, options.seed, rep);
        const long slot_base = static_cast<long>(rep) * options.n_slots;

#pragma omp parallel num_threads(threads)
        {
            std::vector<long> local_outage(n_schemes, 0);
            std::vector<double> local_time(n_schemes, 0.0);
            std::vector<std::uint64_t> local_comp(n_schemes, 0);

#pragma omp for schedule(static)
            for (long slot = 0; slot < options.n_slots; ++slot) {
                const ChannelRealization channel =
                    sample_small_scale(large, config, options.seed, static_cast<std::uint64_t>(slot_base + slot));
                for (int si = 0; si < n_schemes; ++si) {
                    const auto t0 = clock_type::now();
                    const RelayAssignment a = run_scheme(schemes[si], channel, spaces, config, selector);
                    const auto t1 = clock_type::now();
                    local_outage[si] += is_outage(a) ? 1 : 0;
                    local_time[si] += elapsed_ms(t0, t1);
                    local_comp[si] += a.comparisons;
                    if (options.record_values)
                        result.slot_values[si][slot_base + slot] = a.value;
                }
            }

#pragma omp critical
            for (int si = 0; si < n_schemes; ++si) {
                outage[si] += local_outage[si];
                time_ms[si] += local_time[si];
                comparisons[si] += local_comp[si];
            }
        }
    }

    result.estimates.resize(n_schemes);
    for (int si = 0; si < n_schemes; ++si) {
        OutageEstimate& e = result.estimates[si];
        e.scheme = scheme_name(schemes[si]);
        e.trials = total_slots;
        e.outage_count = outage[si];
        e.probability = static_cast<double>(outage[si]) / static_cast<double>(total_slots);
        std::tie(e.ci_low, e.ci_high) = wilson_interval(outage[si], total_slots);
        e.mean_time_ms = time_ms[si] / static_cast<double>(total_slots);
        e.mean_comparisons = static_cast<double>(comparisons[si]) / static_cast<double>(total_slots);
    }
    return result;
}

std::string_view axis_name(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::TxPowerDbm: return "tx_power_dbm";
    case SweepAxis::Hops: return "n_hops";
    case SweepAxis::Relays: return "relays_per_hop";
    case SweepAxis::Pairs: return "n_pairs";
    }
    return "unknown";
}

namespace {

NetworkConfig apply_axis(NetworkConfig config, SweepAxis axis, double value) {
    // Collapse derived fields so the point re-validates cleanly.
    config.padded_relays = 0;
    config.dummy_mask.clear();
    switch (axis) {
    case SweepAxis::TxPowerDbm:
        config.tx_power_dbm = value;
        break;
    case SweepAxis::Hops: {
        const bool uniform = std::all_of(config.relays_per_hop.begin(), config.relays_per_hop.end(),
                                         [&](int m) { return m == config.relays_per_hop.front(); });
        if (!uniform)
            throw SimError(Errc::ShapeMismatch, "hop sweeps need a uniform relay count");
        config.relays_per_hop = {config.relays_per_hop.front()};
        config.n_hops = static_cast<int>(value);
        break;
    }
    case SweepAxis::Relays:
        config.relays_per_hop = {static_cast<int>(value)};
        break;
    case SweepAxis::Pairs: {
        const bool uniform =
            std::all_of(config.sinr_thresholds.begin(), config.sinr_thresholds.end(),
                        [&](double t) { return t == config.sinr_thresholds.front(); });
        if (!config.sinr_thresholds.empty() && !uniform)
            throw SimError(Errc::ShapeMismatch, "pair sweeps need a uniform SINR threshold");
        if (!config.sinr_thresholds.empty())
            config.sinr_thresholds.resize(1);
        config.n_pairs = static_cast<int>(value);
        break;
    }
    }
    return config;
}

} // namespace

std::vector<SweepRow> sweep(const NetworkConfig& base, SweepAxis axis, const std::vector<double>& values,
                            const std::vector<Scheme>& schemes, const McOptions& options) {
    std::vector<SweepRow> rows;
    rows.reserve(values.size() * schemes.size());
    for (double value : values) {
        const NetworkConfig point = apply_axis(base, axis, value);
        McResult res = estimate_outage(point, schemes, options);
        for (OutageEstimate& e : res.estimates)
            rows.push_back({value, std::move(e)});
    }
    return rows;
}

} // namespace relaynet
