#pragma once

#include <cstdint>
#include <random>

namespace commalg {

/// Seeded generator with a platform-independent integer draw, so generated
/// instances are identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant at these ranges.
    long long uniform(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(engine_() % span);
    }

    long long nonzero(long long lo, long long hi) {
        for (;;) {
            if (const long long v = uniform(lo, hi); v != 0) return v;
        }
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace commalg
