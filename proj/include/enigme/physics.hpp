#pragma once

#include "enigme/category.hpp"
#include "enigme/puzzle.hpp"
#include "enigme/rng.hpp"
#include "enigme/textgrid.hpp"
#include "enigme/variations.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace enigme {

inline constexpr int kMaxSpeed = 2;

struct Body {
    Coord position{0, 0, 0};
    Coord velocity{0, 0, 0};
    Coord acceleration{0, 0, 0};
    char glyph = 'A';

    friend bool operator==(const Body&, const Body&) = default;
};

/// Bounded grid with reflective walls and 1 to 3 bodies. Axes at or beyond
/// `axes` are inactive: extent 1, coordinates and kinematics 0.
struct World {
    Extents extents;
    int axes = 1;
    char background = '.';
    std::vector<Body> bodies;

    friend bool operator==(const World&, const World&) = default;
};

/// Raised when one frame's collisions cannot be resolved pairwise.
class UnresolvableCollision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StepOutcome {
    World world;
    int reflections = 0;          // wall bounces across all bodies and axes
    int collisions = 0;           // body pairs that exchanged velocities
    int velocity_changes = 0;     // axes whose velocity changed through acceleration
};

/// Advances one frame:
///  1. velocity += acceleration, clamped to [-2, 2]; a decelerating axis that
///     reaches zero stops and drops its acceleration;
///  2. each body moves along its new velocity, folding back off the walls
///     (p -> 2M - p above the last cell, p -> -p below 0) with that velocity
///     component negated;
///  3. two bodies whose paths meet at the same point at the same instant within
///     the frame keep their starting cells and exchange velocity vectors.
/// Returns nullopt when a body is involved in more than one collision, or a
/// stopped pair is then hit by a third body.
std::optional<StepOutcome> try_step(const World& world);

/// try_step that throws UnresolvableCollision instead of returning nullopt.
World step(const World& world);

/// Throws ContractError if the world breaks an invariant (bounds, overlapping
/// or duplicate glyphs, speed above 2, extent below 4 on an active axis).
void validate(const World& world);

Grid paint(const World& world);

/// Rendered frame following `last_shown`.
std::string solve_physics(const World& last_shown);

enum class Flavour : std::uint8_t { uniform, acceleration, deceleration, bounce, collision };

inline constexpr std::array<Flavour, 5> all_flavours{Flavour::uniform, Flavour::acceleration,
                                                     Flavour::deceleration, Flavour::bounce,
                                                     Flavour::collision};

std::string_view to_string(Flavour flavour);

/// Body list as stored in meta: "glyph=A,pos=2|0,vel=1|0,acc=0|0;glyph=B,...".
std::string format_bodies(const std::vector<Body>& bodies, int axes);
std::vector<Body> parse_bodies(std::string_view text, int axes);

/// Rebuilds the world stored in meta under `key` ("bodies" for the first shown
/// frame, "state" for the last one).
World world_from_meta(const Meta& meta, std::string_view key);

struct PhysicsConfig {
    std::array<std::pair<int, int>, 3> side_range{{{8, 16}, {6, 9}, {4, 5}}};
    int shown_frames = 3;
    int max_bodies = 3;
};

const PhysicsConfig& default_physics_config();

Puzzle generate_physics(Dimension dimension, RngStream& rng);
Puzzle generate_physics(Dimension dimension, RngStream& rng, const PhysicsConfig& config);

std::vector<ParameterAxis> physics_parameter_axes(Dimension dimension, const PhysicsConfig& config);

} // namespace enigme
