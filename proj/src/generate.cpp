#include "enigme/generate.hpp"

#include "enigme/numeric.hpp"
#include "enigme/physics.hpp"
#include "enigme/rng.hpp"
#include "enigme/sequence.hpp"

#include <json.hpp>

namespace enigme {

Puzzle generate(Category category, Dimension dimension, std::uint64_t seed) {
    RngStream rng(seed);
    Puzzle p;
    switch (category) {
    case Category::numeric: p = generate_numeric(dimension, rng); break;
    case Category::sequence: p = generate_sequence(dimension, rng); break;
    case Category::physics: p = generate_physics(dimension, rng); break;
    }
    p.seed = seed;
    p.id = puzzle_id(category, dimension, seed);
    p.meta["spec_version"] = kSchemaVersion;
    return p;
}

std::string to_json_line(const Puzzle& puzzle, bool with_solution) {
    nlohmann::ordered_json j;
    j["id"] = puzzle.id;
    j["category"] = std::string(to_string(puzzle.category));
    j["dimension"] = puzzle.dimension.value();
    j["seed"] = puzzle.seed;
    j["prompt"] = puzzle.prompt;
    if (with_solution) {
        j["solution"] = puzzle.solution;
    }
    j["meta"] = puzzle.meta;
    return j.dump();
}

} // namespace enigme
