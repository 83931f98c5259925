#include "enigme/rng.hpp"

#include "enigme/errors.hpp"

#include <string>

namespace enigme {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
}

} // namespace

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed) noexcept {
    for (auto& word : state_) {
        word = splitmix64(seed);
    }
}

std::uint64_t RngStream::next() noexcept {
    auto& s = state_;
    const std::uint64_t result = rotl(s[1] * 5, 7) * 9;
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
}

// span_size == 0 stands for the full 2^64 range.
std::uint64_t RngStream::bounded(std::uint64_t span_size) noexcept {
    if (span_size == 0) {
        return next();
    }
    // Values below `threshold` would make the low residues more likely.
    const std::uint64_t threshold = (0 - span_size) % span_size;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= threshold) {
            return x % span_size;
        }
    }
}

std::int64_t RngStream::draw_range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw ContractError("draw_range: lo (" + std::to_string(lo) + ") > hi (" +
                            std::to_string(hi) + ")");
    }
    const std::uint64_t span_size =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + bounded(span_size));
}

std::size_t RngStream::draw_index(std::size_t count) {
    if (count == 0) {
        throw ContractError("draw_index: empty range");
    }
    return static_cast<std::size_t>(bounded(static_cast<std::uint64_t>(count)));
}

bool RngStream::draw_chance(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0 || numerator > denominator) {
        throw ContractError("draw_chance: invalid probability");
    }
    return bounded(denominator) < numerator;
}

} // namespace enigme
