#pragma once

#include "enigme/category.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace enigme {

using Meta = std::map<std::string, std::string>;

struct Puzzle {
    std::string id;
    Category category = Category::numeric;
    Dimension dimension{1};
    std::uint64_t seed = 0;
    std::string prompt;
    std::string solution;
    Meta meta;

    friend bool operator==(const Puzzle&, const Puzzle&) = default;
};

/// First 16 hex digits of FNV-1a 64 over "category:dimension:seed".
std::string puzzle_id(Category category, Dimension dimension, std::uint64_t seed);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Version tag stored in every puzzle's meta under "spec_version".
inline constexpr const char* kSchemaVersion = "1";

} // namespace enigme
