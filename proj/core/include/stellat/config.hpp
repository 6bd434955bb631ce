#pragma once

#include <atomic>

namespace stellat::canon {

/// Coefficients whose magnitude falls below this threshold after an
/// arithmetic operation are dropped during canonicalization. Process-wide;
/// set once at startup if the default is not wanted.
inline std::atomic<double>& drop_threshold() {
    static std::atomic<double> v{1e-15};
    return v;
}

inline double drop_tol() { return drop_threshold().load(std::memory_order_relaxed); }

} // namespace stellat::canon
