#pragma once

#include "stellat/scalar.hpp"

#include <cstdint>
#include <string_view>

namespace stellat {

/// Counter-based deterministic generator keyed by (seed, stream, trial).
/// Each trial owns an independent stream, so per-trial results do not
/// depend on execution order and reports are reproducible bit for bit.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::string_view stream, std::uint64_t trial);

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    double uniform(double a, double b);
    /// Uniform integer in [a, b], inclusive.
    int uniform_int(int a, int b);
    /// Standard normal (Box-Muller).
    double normal();
    CScalar complex_gaussian();
    bool coin() { return (next_u64() & 1u) != 0; }

private:
    std::uint64_t state_;
};

} // namespace stellat
