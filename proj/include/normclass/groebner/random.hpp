#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace normclass {

/// Source of "generic" integer constants (chart forms, covectors A, lines L).
///
/// Algorithm: std::mt19937_64 seeded with the 64-bit seed; each draw takes
/// one raw output x and returns (x mod 195) - 97, an integer in [-97, 97].
/// The engine draws of std::mt19937_64 are fixed by the C++ standard, so a
/// seed reproduces the same constants on every conforming platform.
class GenericDraw {
public:
    static constexpr long kBound = 97;

    explicit GenericDraw(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    long next() {
        std::uint64_t x = engine_();
        return static_cast<long>(x % (2 * kBound + 1)) - kBound;
    }
    long next_nonzero() {
        for (;;) {
            long v = next();
            if (v != 0) return v;
        }
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

/// Seeds of the two independent draws used on attempt `attempt` (0-based)
/// for a user seed. Attempt r uses (1000*seed + 2r, 1000*seed + 2r + 1).
inline std::pair<std::uint64_t, std::uint64_t> seed_pair(std::uint64_t seed, unsigned attempt) {
    std::uint64_t base = seed * 1000u + 2u * attempt;
    return {base, base + 1};
}

} // namespace normclass
