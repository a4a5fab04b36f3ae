#pragma once

#include <cstdint>

namespace cineforge {

namespace detail {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace detail

// Counter-based generator (splitmix64). Bit-identical across platforms;
// cheap to fork into independent streams, which is what keeps plans and
// simulation replays reproducible.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += detail::kGolden;
        return detail::mix64(state_);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

private:
    std::uint64_t state_;
};

// Order-sensitive seed combinator for deriving per-directive streams from
// (global_seed, feature, segment_index, directive_index) and for random
// access into time-bucketed samples (flicker, wander).
inline std::uint64_t combine_seed(std::uint64_t a, std::uint64_t b) {
    return detail::mix64(a + detail::kGolden * (b + 1));
}

inline std::uint64_t combine_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return combine_seed(combine_seed(a, b), c);
}

inline std::uint64_t combine_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                  std::uint64_t d) {
    return combine_seed(combine_seed(a, b, c), d);
}

} // namespace cineforge
