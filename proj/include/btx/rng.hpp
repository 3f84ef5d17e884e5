#pragma once

#include <cstdint>

namespace btx {

/// splitmix64 stream; fixed algorithm so identical seeds give identical
/// values on every platform (std distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); modulo bias is irrelevant for the
    /// tiny bounds used here.
    std::uint64_t below(std::uint64_t bound) { return bound <= 1 ? 0 : next() % bound; }

    /// Inclusive range.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return next() & 1; }

private:
    std::uint64_t state_;
};

/// Counter-based per-trial seed so parallel or reordered execution cannot
/// change any trial's randomness.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    return r.next();
}

}  // namespace btx
