#ifndef SPECDATA_RNG_HPP
#define SPECDATA_RNG_HPP

#include <cstdint>

namespace specdata {

/// Counter-based splittable generator (SplitMix64 core). Every stream is a
/// pure function of (seed, stream index), so trials can run concurrently and
/// still reproduce byte-identical results.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ULL)) {}

    static SeededRng for_stream(std::uint64_t seed, std::uint64_t stream) {
        return SeededRng(mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1)));
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace specdata

#endif
