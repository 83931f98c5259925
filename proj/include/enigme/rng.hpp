#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace enigme {

/// Deterministic random stream: xoshiro256** whose state is filled by four
/// splitmix64 outputs of the seed. The draw sequence is a pure function of the
/// seed on every platform.
///
/// Streams are exclusively owned. Copying is disabled so that two consumers
/// can never silently replay the same draws; give each task its own seed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) noexcept;

    RngStream(const RngStream&) = delete;
    RngStream& operator=(const RngStream&) = delete;
    RngStream(RngStream&&) noexcept = default;
    RngStream& operator=(RngStream&&) noexcept = default;

    /// Next raw 64-bit output.
    std::uint64_t next() noexcept;

    /// Uniform integer in [lo, hi]. Rejection sampling, so there is no modulo
    /// bias. Throws ContractError when lo > hi.
    std::int64_t draw_range(std::int64_t lo, std::int64_t hi);

    /// Uniform index in [0, count). count must be positive.
    std::size_t draw_index(std::size_t count);

    /// True with probability numerator / denominator.
    bool draw_chance(std::uint64_t numerator, std::uint64_t denominator);

    template <typename T>
    const T& pick(std::span<const T> items) {
        return items[draw_index(items.size())];
    }

private:
    std::uint64_t bounded(std::uint64_t span_size) noexcept;

    std::array<std::uint64_t, 4> state_;
};

inline RngStream make_rng(std::uint64_t seed) noexcept { return RngStream{seed}; }

/// splitmix64 step: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

} // namespace enigme
