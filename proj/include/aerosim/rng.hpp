#ifndef AEROSIM_RNG_HPP
#define AEROSIM_RNG_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace aerosim {

/// Named random stream. The generator state is derived from (seed, label), so
/// adding a consumer with a new label does not perturb existing streams.
/// Identical (seed, label) yields an identical draw sequence on every platform;
/// uniform doubles are produced from raw 64-bit draws rather than
/// std::uniform_real_distribution, whose output is implementation-defined.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::string_view label)
        : engine_(mix(seed ^ fnv1a(label))), label_(label) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    const std::string& label() const { return label_; }

private:
    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        return h;
    }

    // splitmix64 finalizer; decorrelates nearby seeds before feeding mt19937_64
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
    std::string label_;
};

} // namespace aerosim

#endif
