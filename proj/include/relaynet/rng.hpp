#ifndef RELAYNET_RNG_HPP
#define RELAYNET_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace relaynet {

// Seedable generator with an explicit stream-splitting rule. Every consumer
// derives its own stream from (seed, stream kind, index), so samples are
// reproducible and independent of the order in which streams are drawn:
//   large-scale fading   -> Rng(seed, Stream::LargeScale)
//   small-scale, slot s  -> Rng(seed, Stream::SmallScale, s)
// The engine is mt19937_64 and all variate transforms are implemented here,
// so identical seeds give identical draws on any platform.
class Rng {
  public:
    enum class Stream : std::uint64_t {
        LargeScale = 1,
        SmallScale = 2,
        Generic = 3,
    };

    Rng(std::uint64_t seed, Stream stream, std::uint64_t index = 0)
        : engine_(derive_key(seed, static_cast<std::uint64_t>(stream), index)) {}

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Unit-mean exponential; the squared magnitude of a zero-mean,
    // unit-variance complex Gaussian has exactly this law.
    double exponential() { return -std::log1p(-uniform()); }

    // Standard normal via Box-Muller; consumes two uniforms per call.
    double normal() {
        double u = 1.0 - uniform(); // (0, 1], keeps the log finite
        double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    std::uint64_t raw() { return engine_(); }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;
        std::uint64_t k = mix(seed + golden * stream);
        k = mix(k + golden * index);
        return k;
    }

    std::mt19937_64 engine_;
};

} // namespace relaynet

#endif
