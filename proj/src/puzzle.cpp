#include "enigme/puzzle.hpp"

#include <fmt/format.h>

namespace enigme {

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string puzzle_id(Category category, Dimension dimension, std::uint64_t seed) {
    const auto key = fmt::format("{}:{}:{}", to_string(category), dimension.value(), seed);
    return fmt::format("{:016x}", fnv1a64(key));
}

} // namespace enigme
