#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace mdpforge {

// SplitMix64 finalizer; the basis of every derived stream.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t hash_label(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Counter-based stream. The value sequence is a pure function of (key, counter),
// and keys are derived from structural ids (stream name, candidate id, seed
// index, episode index), so results never depend on scheduling order.
class RngStream {
public:
    RngStream() = default;
    explicit RngStream(std::uint64_t key) : key_(key) {}

    static RngStream from_seed(std::uint64_t seed) { return RngStream(mix64(seed ^ 0x5851f42d4c957f2dULL)); }

    [[nodiscard]] RngStream child(std::string_view label) const { return RngStream(mix64(key_ ^ hash_label(label))); }
    [[nodiscard]] RngStream child(std::uint64_t index) const {
        return RngStream(mix64(key_ ^ mix64(index + 0x632be59bd9b4e019ULL)));
    }
    [[nodiscard]] std::uint64_t key() const { return key_; }

    std::uint64_t next_u64() { return mix64(key_ + 0x2545f4914f6cdd1dULL * ++counter_); }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in {0, ..., n-1}; n must be > 0
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    double next_gaussian() {
        double u1 = 1.0 - next_unit();  // (0, 1]
        double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace mdpforge
