#pragma once

#include "enigme/category.hpp"
#include "enigme/puzzle.hpp"

#include <cstdint>
#include <string>

namespace enigme {

/// Builds the puzzle for (category, dimension, seed) with the default
/// configuration. Same inputs always give a byte-identical Puzzle.
Puzzle generate(Category category, Dimension dimension, std::uint64_t seed);

/// One compact JSON object, no trailing newline. Keys in order: id, category,
/// dimension, seed, prompt, solution (only when requested), meta.
std::string to_json_line(const Puzzle& puzzle, bool with_solution);

} // namespace enigme
