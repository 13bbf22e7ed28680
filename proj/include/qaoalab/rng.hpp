#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qaoalab {

namespace detail {

// Finalizer of the SplitMix64 generator (Vigna's constants).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

} // namespace detail

// Small self-contained PRNG. All randomness in the project flows through it
// so that runs reproduce bit-for-bit regardless of platform or standard
// library version (std::uniform_*_distribution output is not pinned by the
// standard).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += detail::kGolden;
        return detail::mix64(state_);
    }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Uniform integer in [0, bound), bound >= 1. Masked rejection, unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            const std::uint64_t v = next_u64() & mask;
            if (v < bound) return v;
        }
    }

    // Fisher-Yates.
    template <class T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[next_below(i)]);
        }
    }

private:
    std::uint64_t state_;
};

// Derives a child seed from a base seed and up to three stream words.
// Position-sensitive: derive_seed(s, a, b) != derive_seed(s, b, a). Used to
// split one master seed into independent per-(instance, depth, trial) streams
// so results do not depend on scheduling or execution order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = base;
    for (std::uint64_t w : {a, b, c}) {
        s += detail::kGolden;
        s = detail::mix64(s) ^ w;
    }
    s += detail::kGolden;
    return detail::mix64(s);
}

} // namespace qaoalab
