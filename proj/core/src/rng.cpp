#include "stellat/rng.hpp"

#include <cmath>
#include <numbers>

namespace stellat {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::string_view stream, std::uint64_t trial) {
    std::uint64_t s = seed;
    state_ = splitmix64(s) ^ fnv1a(stream);
    state_ ^= 0x9e3779b97f4a7c15ULL * (trial + 1);
    (void)next_u64(); // decorrelate nearby keys
}

std::uint64_t CounterRng::next_u64() { return splitmix64(state_); }

double CounterRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double a, double b) { return a + (b - a) * uniform(); }

int CounterRng::uniform_int(int a, int b) {
    const auto span = static_cast<std::uint64_t>(b - a + 1);
    return a + static_cast<int>(next_u64() % span);
}

double CounterRng::normal() {
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

CScalar CounterRng::complex_gaussian() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

} // namespace stellat
