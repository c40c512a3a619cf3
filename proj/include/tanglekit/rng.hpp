#pragma once

#include <cstdint>
#include <random>

#include "tanglekit/errors.hpp"

namespace tanglekit {

using u64 = std::uint64_t;

// Deterministic generator for property tests and fuzzing: mt19937_64 output
// is specified bit-for-bit, so a fixed seed reproduces the same diagrams on
// any platform. The modulo draw is biased in principle but irrelevant here.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(u64 seed) : engine(seed) {}

    u64 next() { return engine(); }

    i64 range(i64 lo, i64 hi) { // inclusive bounds
        if (lo > hi) throw IndexError("empty random range");
        u64 span = static_cast<u64>(hi) - static_cast<u64>(lo) + 1;
        return lo + static_cast<i64>(next() % span);
    }

    bool one_in(i64 k) { return range(1, k) == 1; }
};

} // namespace tanglekit
