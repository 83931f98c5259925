#include "enigme/physics.hpp"

#include "enigme/errors.hpp"
#include "enigme/sequence.hpp"

#include <boost/rational.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <charconv>

namespace enigme {

namespace {

using Time = boost::rational<long long>;

constexpr int kMaxAttempts = 20000;
constexpr int kMaxBodyDraws = 2000;

int sign(int v) noexcept { return (v > 0) - (v < 0); }

// Motion of one body along one axis during a frame, folded at most once off a
// wall (speed <= 2 and extent >= 4 rule out a second fold).
struct AxisPath {
    long long start = 0;
    long long velocity = 0;
    long long wall = 0;      // last cell index
    std::optional<Time> fold; // instant the body touches the wall, if it does

    AxisPath(int p, int v, int extent) : start(p), velocity(v), wall(extent - 1) {
        const long long end = start + velocity;
        if (end > wall) {
            fold = Time(wall - start, velocity);
        } else if (end < 0) {
            fold = Time(start, -velocity);
        }
    }

    // Linear coefficients (offset, slope) of the position on a stretch of time
    // that lies entirely before or after the fold.
    [[nodiscard]] std::pair<Time, Time> piece(const Time& mid) const {
        if (!fold || mid < *fold) {
            return {Time(start), Time(velocity)};
        }
        if (start + velocity > wall) {
            return {Time(2 * wall - start), Time(-velocity)};
        }
        return {Time(-start), Time(-velocity)};
    }

    [[nodiscard]] int end_position() const noexcept {
        const long long end = start + velocity;
        if (end > wall) {
            return static_cast<int>(2 * wall - end);
        }
        return static_cast<int>(end < 0 ? -end : end);
    }
};

struct Path {
    std::array<std::optional<AxisPath>, 3> axis;
};

Path path_of(const Coord& position, const Coord& velocity, const World& world) {
    Path path;
    for (int a = 0; a < world.axes; ++a) {
        const auto i = static_cast<std::size_t>(a);
        path.axis[i].emplace(position[i], velocity[i], world.extents.along(a));
    }
    return path;
}

// True when the two paths share a point at some instant t in (0, 1].
bool paths_meet(const Path& p, const Path& q, int axes) {
    std::vector<Time> cuts{Time(0), Time(1)};
    for (int a = 0; a < axes; ++a) {
        for (const auto* path : {&p, &q}) {
            const auto& ap = *path->axis[static_cast<std::size_t>(a)];
            if (ap.fold) {
                cuts.push_back(*ap.fold);
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const Time lo = cuts[k];
        const Time hi = cuts[k + 1];
        const Time mid = (lo + hi) / 2;
        // Candidate meeting time fixed by some axis; nullopt while every axis
        // agrees over the whole stretch.
        std::optional<Time> when;
        bool possible = true;
        for (int a = 0; a < axes && possible; ++a) {
            const auto i = static_cast<std::size_t>(a);
            const auto [pa, pb] = p.axis[i]->piece(mid);
            const auto [qa, qb] = q.axis[i]->piece(mid);
            const Time offset = pa - qa;
            const Time slope = pb - qb;
            if (slope == Time(0)) {
                possible = offset == Time(0);
                continue;
            }
            const Time t = -offset / slope;
            if (t < lo || t > hi || (when && *when != t)) {
                possible = false;
            } else {
                when = t;
            }
        }
        if (possible && (!when || *when > Time(0))) {
            return true;
        }
    }
    return false;
}

void update_velocity(Body& body, int axes, int& changes) {
    for (int a = 0; a < axes; ++a) {
        const auto i = static_cast<std::size_t>(a);
        int& v = body.velocity[i];
        int& acc = body.acceleration[i];
        if (acc == 0) {
            continue;
        }
        const int before = v;
        const bool braking = v != 0 && sign(acc) != sign(v);
        int next = v + acc;
        if (braking && sign(next) != sign(v)) {
            next = 0;
            acc = 0;
        }
        v = std::clamp(next, -kMaxSpeed, kMaxSpeed);
        if (v != before) {
            ++changes;
        }
    }
}

int parse_int(std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw FormatError(fmt::format("expected an integer, got \"{}\"", text));
    }
    return value;
}

Coord parse_vector(std::string_view text, int axes) {
    Coord out{0, 0, 0};
    for (int a = 0; a < axes; ++a) {
        const auto bar = text.find('|');
        if ((bar == std::string_view::npos) != (a == axes - 1)) {
            throw FormatError(fmt::format("expected {} components in \"{}\"", axes, text));
        }
        out[static_cast<std::size_t>(a)] = parse_int(text.substr(0, bar));
        if (bar != std::string_view::npos) {
            text.remove_prefix(bar + 1);
        }
    }
    return out;
}

std::string format_vector(const Coord& v, int axes) {
    std::string out;
    for (int a = 0; a < axes; ++a) {
        out += fmt::format("{}{}", a ? "|" : "", v[static_cast<std::size_t>(a)]);
    }
    return out;
}

BigCount power(const BigCount& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

} // namespace

std::string_view to_string(Flavour flavour) {
    switch (flavour) {
    case Flavour::uniform: return "uniform";
    case Flavour::acceleration: return "acceleration";
    case Flavour::deceleration: return "deceleration";
    case Flavour::bounce: return "bounce";
    case Flavour::collision: return "collision";
    }
    return "unknown";
}

void validate(const World& world) {
    if (world.axes < 1 || world.axes > 3) {
        throw ContractError("world must have 1 to 3 axes");
    }
    if (world.bodies.empty() || world.bodies.size() > 3) {
        throw ContractError("world must hold 1 to 3 bodies");
    }
    if (!kPalette.is_background(world.background)) {
        throw ContractError("world background is not a background character");
    }
    for (int a = 0; a < 3; ++a) {
        const int extent = world.extents.along(a);
        if (a < world.axes ? extent < 4 : extent != 1) {
            throw ContractError(fmt::format("bad extent {} on axis {}", extent, a));
        }
    }
    for (std::size_t i = 0; i < world.bodies.size(); ++i) {
        const auto& b = world.bodies[i];
        if (!kPalette.is_foreground(b.glyph)) {
            throw ContractError(fmt::format("glyph '{}' is not a foreground character", b.glyph));
        }
        for (int a = 0; a < 3; ++a) {
            const auto k = static_cast<std::size_t>(a);
            const bool active = a < world.axes;
            if (b.position[k] < 0 || b.position[k] >= world.extents.along(a) ||
                std::abs(b.velocity[k]) > kMaxSpeed || std::abs(b.acceleration[k]) > 1 ||
                (!active && (b.velocity[k] != 0 || b.acceleration[k] != 0))) {
                throw ContractError(fmt::format("body '{}' has invalid kinematics", b.glyph));
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (world.bodies[j].glyph == b.glyph || world.bodies[j].position == b.position) {
                throw ContractError(fmt::format("bodies '{}' and '{}' clash", world.bodies[j].glyph,
                                                b.glyph));
            }
        }
    }
}

std::optional<StepOutcome> try_step(const World& world) {
    validate(world);
    StepOutcome out;
    out.world = world;
    auto& bodies = out.world.bodies;
    const int axes = world.axes;

    for (auto& b : bodies) {
        update_velocity(b, axes, out.velocity_changes);
    }

    std::vector<Path> paths;
    for (const auto& b : bodies) {
        paths.push_back(path_of(b.position, b.velocity, world));
    }

    // Pairs whose unobstructed paths meet; each body may appear in one pair only.
    std::vector<int> partner(bodies.size(), -1);
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        for (std::size_t j = i + 1; j < bodies.size(); ++j) {
            if (!paths_meet(paths[i], paths[j], axes)) {
                continue;
            }
            if (partner[i] >= 0 || partner[j] >= 0) {
                return std::nullopt;
            }
            partner[i] = static_cast<int>(j);
            partner[j] = static_cast<int>(i);
            ++out.collisions;
        }
    }

    // Colliding bodies hold their cells for this frame; nobody else may run into them.
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        if (partner[i] < 0) {
            continue;
        }
        const Path still = path_of(bodies[i].position, Coord{0, 0, 0}, world);
        for (std::size_t j = 0; j < bodies.size(); ++j) {
            if (partner[j] < 0 && paths_meet(paths[j], still, axes)) {
                return std::nullopt;
            }
        }
    }

    const auto entering = bodies;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        auto& b = bodies[i];
        if (partner[i] >= 0) {
            b.velocity = entering[static_cast<std::size_t>(partner[i])].velocity;
            continue;
        }
        for (int a = 0; a < axes; ++a) {
            const auto k = static_cast<std::size_t>(a);
            const auto& ap = *paths[i].axis[k];
            b.position[k] = ap.end_position();
            if (ap.fold) {
                b.velocity[k] = -b.velocity[k];
                ++out.reflections;
            }
        }
    }
    return out;
}

World step(const World& world) {
    auto outcome = try_step(world);
    if (!outcome) {
        throw UnresolvableCollision("collision involving more than two bodies in one frame");
    }
    return std::move(outcome->world);
}

Grid paint(const World& world) {
    Grid grid(world.extents, world.background);
    for (const auto& b : world.bodies) {
        grid.set(b.position, b.glyph);
    }
    return grid;
}

std::string solve_physics(const World& last_shown) { return render(paint(step(last_shown))); }

std::string format_bodies(const std::vector<Body>& bodies, int axes) {
    std::string out;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        const auto& b = bodies[i];
        out += fmt::format("{}glyph={},pos={},vel={},acc={}", i ? ";" : "", b.glyph,
                           format_vector(b.position, axes), format_vector(b.velocity, axes),
                           format_vector(b.acceleration, axes));
    }
    return out;
}

std::vector<Body> parse_bodies(std::string_view text, int axes) {
    std::vector<Body> bodies;
    while (!text.empty()) {
        const auto semi = text.find(';');
        std::string_view item = text.substr(0, semi);
        Body b;
        int fields = 0;
        while (!item.empty()) {
            const auto comma = item.find(',');
            const auto field = item.substr(0, comma);
            const auto eq = field.find('=');
            if (eq == std::string_view::npos) {
                throw FormatError(fmt::format("bad body field \"{}\"", field));
            }
            const auto key = field.substr(0, eq);
            const auto value = field.substr(eq + 1);
            if (key == "glyph" && value.size() == 1) {
                b.glyph = value[0];
            } else if (key == "pos") {
                b.position = parse_vector(value, axes);
            } else if (key == "vel") {
                b.velocity = parse_vector(value, axes);
            } else if (key == "acc") {
                b.acceleration = parse_vector(value, axes);
            } else {
                throw FormatError(fmt::format("unknown body field \"{}\"", field));
            }
            ++fields;
            if (comma == std::string_view::npos) {
                break;
            }
            item.remove_prefix(comma + 1);
        }
        if (fields != 4) {
            throw FormatError("body needs glyph, pos, vel and acc");
        }
        bodies.push_back(b);
        if (semi == std::string_view::npos) {
            break;
        }
        text.remove_prefix(semi + 1);
    }
    return bodies;
}

World world_from_meta(const Meta& meta, std::string_view key) {
    const auto get = [&](const std::string& k) -> const std::string& {
        const auto it = meta.find(k);
        if (it == meta.end()) {
            throw FormatError("meta has no \"" + k + "\" entry");
        }
        return it->second;
    };
    World w;
    const auto& extents = get("extents");
    w.extents = parse_extents(extents);
    w.axes = 1 + static_cast<int>(std::count(extents.begin(), extents.end(), 'x'));
    const auto& bg = get("background");
    if (bg.size() != 1) {
        throw FormatError("background must be one character");
    }
    w.background = bg[0];
    w.bodies = parse_bodies(get(std::string(key)), w.axes);
    validate(w);
    return w;
}

const PhysicsConfig& default_physics_config() {
    static const PhysicsConfig config;
    return config;
}

Puzzle generate_physics(Dimension dimension, RngStream& rng) {
    return generate_physics(dimension, rng, default_physics_config());
}

namespace {

bool accelerations_fit(const Body& b, Flavour flavour, int axes) {
    for (int a = 0; a < axes; ++a) {
        const auto k = static_cast<std::size_t>(a);
        const int acc = b.acceleration[k];
        const int v = b.velocity[k];
        if (acc == 0) {
            continue;
        }
        const bool ok = flavour == Flavour::acceleration ? (v == 0 || sign(v) == sign(acc))
                                                         : (v != 0 && sign(v) != sign(acc));
        if (!ok) {
            return false;
        }
    }
    return true;
}

// Steps that must stay clear of walls outside the bounce flavour. A speeding
// body covers at least 1 + 2 + 2 cells in three steps, more than a 3-D box
// holds, so accelerating flavours only keep the shown frames wall-free.
int quiet_steps(Flavour flavour, int frames) {
    const bool accelerates = flavour == Flavour::acceleration || flavour == Flavour::deceleration;
    return accelerates ? frames - 1 : frames;
}

// Runs `frames` steps of a one-body world and reports whether it ever bounces.
bool bounces_alone(const World& world, const Body& body, int frames) {
    World solo = world;
    solo.bodies = {body};
    for (int i = 0; i < frames; ++i) {
        auto next = try_step(solo);
        if (!next || next->reflections > 0) {
            return true;
        }
        solo = std::move(next->world);
    }
    return false;
}

bool occupied(const std::vector<Body>& bodies, const Coord& cell) {
    return std::any_of(bodies.begin(), bodies.end(),
                       [&](const Body& b) { return b.position == cell; });
}

Body random_body(RngStream& rng, const World& world, bool with_acceleration) {
    Body b;
    for (int a = 0; a < world.axes; ++a) {
        const auto k = static_cast<std::size_t>(a);
        b.position[k] = static_cast<int>(rng.draw_range(0, world.extents.along(a) - 1));
        b.velocity[k] = static_cast<int>(rng.draw_range(-kMaxSpeed, kMaxSpeed));
        if (with_acceleration) {
            b.acceleration[k] = static_cast<int>(rng.draw_range(-1, 1));
        }
    }
    return b;
}

// Draws a body that fits the flavour on its own, or nullopt when the budget runs out.
std::optional<Body> admissible_body(RngStream& rng, const World& world, Flavour flavour,
                                    int frames) {
    const bool accelerates = flavour == Flavour::acceleration || flavour == Flavour::deceleration;
    for (int i = 0; i < kMaxBodyDraws; ++i) {
        Body b = random_body(rng, world, accelerates);
        if (occupied(world.bodies, b.position)) {
            continue;
        }
        if (accelerates && !accelerations_fit(b, flavour, world.axes)) {
            continue;
        }
        if (flavour != Flavour::bounce && bounces_alone(world, b, quiet_steps(flavour, frames))) {
            continue;
        }
        return b;
    }
    return std::nullopt;
}

} // namespace

Puzzle generate_physics(Dimension dimension, RngStream& rng, const PhysicsConfig& config) {
    const int axes = dimension.value();
    const auto [lo, hi] = config.side_range[static_cast<std::size_t>(axes - 1)];
    const Flavour flavour = all_flavours[rng.draw_index(all_flavours.size())];
    const int frames = config.shown_frames;

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        World world;
        world.axes = axes;
        world.extents.width = static_cast<int>(rng.draw_range(lo, hi));
        if (axes >= 2) {
            world.extents.height = static_cast<int>(rng.draw_range(lo, hi));
        }
        if (axes >= 3) {
            world.extents.depth = static_cast<int>(rng.draw_range(lo, hi));
        }
        world.background = kBackgroundChars[rng.draw_index(kBackgroundChars.size())];

        const int count = static_cast<int>(
            rng.draw_range(flavour == Flavour::collision ? 2 : 1, config.max_bodies));
        std::string glyphs;
        {
            std::string pool(kForegroundChars);
            for (int i = 0; i < count; ++i) {
                const auto at = rng.draw_index(pool.size());
                glyphs += pool[at];
                pool.erase(at, 1);
            }
        }

        bool drafted = true;
        if (flavour == Flavour::collision) {
            // The second body is aimed at the cell the first reaches after k frames.
            auto first = admissible_body(rng, world, flavour, frames);
            if (!first) {
                continue;
            }
            world.bodies.push_back(*first);
            Body second;
            for (int a = 0; a < axes; ++a) {
                second.velocity[static_cast<std::size_t>(a)] =
                    static_cast<int>(rng.draw_range(-kMaxSpeed, kMaxSpeed));
            }
            const int k = static_cast<int>(rng.draw_range(1, frames));
            bool inside = true;
            for (int a = 0; a < axes; ++a) {
                const auto i = static_cast<std::size_t>(a);
                second.position[i] = first->position[i] + k * (first->velocity[i] - second.velocity[i]);
                inside = inside && second.position[i] >= 0 &&
                         second.position[i] < world.extents.along(a);
            }
            if (!inside || occupied(world.bodies, second.position) ||
                bounces_alone(world, second, quiet_steps(flavour, frames))) {
                continue;
            }
            world.bodies.push_back(second);
        }
        while (drafted && static_cast<int>(world.bodies.size()) < count) {
            auto b = admissible_body(rng, world, flavour, frames);
            if (!b) {
                drafted = false;
                break;
            }
            world.bodies.push_back(*b);
        }
        if (!drafted) {
            continue;
        }
        for (std::size_t i = 0; i < world.bodies.size(); ++i) {
            world.bodies[i].glyph = glyphs[i];
        }

        std::vector<World> states{world};
        int reflections = 0;
        int shown_reflections = 0;
        int collisions = 0;
        int changes = 0;
        bool resolvable = true;
        for (int i = 0; i < frames && resolvable; ++i) {
            auto next = try_step(states.back());
            if (!next) {
                resolvable = false;
                break;
            }
            reflections += next->reflections;
            if (i < quiet_steps(flavour, frames)) {
                shown_reflections += next->reflections;
            }
            collisions += next->collisions;
            changes += next->velocity_changes;
            states.push_back(std::move(next->world));
        }
        if (!resolvable) {
            continue;
        }

        const bool moving = std::any_of(world.bodies.begin(), world.bodies.end(),
                                        [](const Body& b) { return b.velocity != Coord{0, 0, 0}; });
        bool fits = false;
        switch (flavour) {
        case Flavour::uniform: fits = moving && reflections == 0 && collisions == 0; break;
        case Flavour::acceleration:
        case Flavour::deceleration: fits = changes > 0 && shown_reflections == 0 && collisions == 0; break;
        case Flavour::bounce: fits = reflections > 0 && collisions == 0; break;
        case Flavour::collision: fits = collisions > 0 && reflections == 0; break;
        }
        if (!fits) {
            continue;
        }

        std::vector<Grid> shown;
        for (std::size_t i = 0; i + 1 < states.size(); ++i) {
            shown.push_back(paint(states[i]));
        }
        Puzzle p;
        p.category = Category::physics;
        p.dimension = dimension;
        p.prompt = frames_prompt(shown);
        p.solution = render(paint(states.back()));
        p.meta = {
            {"flavour", std::string(to_string(flavour))},
            {"extents", format_extents(world.extents, axes)},
            {"background", std::string(1, world.background)},
            {"bodies", format_bodies(states.front().bodies, axes)},
            {"state", format_bodies(states[states.size() - 2].bodies, axes)},
            {"shown_frames", std::to_string(frames)},
        };
        return p;
    }
    throw GenerationError(fmt::format("physics generator could not build a {} puzzle",
                                      to_string(flavour)));
}

std::vector<ParameterAxis> physics_parameter_axes(Dimension dimension, const PhysicsConfig& config) {
    const int axes = dimension.value();
    const auto [lo, hi] = config.side_range[static_cast<std::size_t>(axes - 1)];
    const auto ax = static_cast<unsigned>(axes);
    const BigCount velocities = power(BigCount(2 * kMaxSpeed + 1), ax);
    const BigCount accelerations = power(BigCount(3), ax);
    const auto fg = static_cast<unsigned>(kForegroundChars.size());
    const auto max_bodies = static_cast<unsigned>(config.max_bodies);

    std::vector<BigCount> cell_counts;
    for (int w = lo; w <= hi; ++w) {
        for (int h = lo; h <= (axes >= 2 ? hi : lo); ++h) {
            for (int d = lo; d <= (axes >= 3 ? hi : lo); ++d) {
                BigCount cells = w;
                if (axes >= 2) {
                    cells *= h;
                }
                if (axes >= 3) {
                    cells *= d;
                }
                cell_counts.push_back(cells);
            }
        }
    }
    BigCount joint = 0;
    for (const auto& cells : cell_counts) {
        const BigCount free_body = cells * velocities;
        for (unsigned n = 1; n <= max_bodies; ++n) {
            const BigCount glyphs = permutations(fg, n);
            // uniform and bounce
            joint += 2 * glyphs * power(free_body, n);
            // acceleration and deceleration
            joint += 2 * glyphs * power(free_body * accelerations, n);
            // collision: aimed second body (velocity and meeting frame), free rest
            if (n >= 2) {
                joint += glyphs * free_body * velocities * config.shown_frames *
                         power(free_body, n - 2);
            }
        }
    }
    return {
        {"background", BigCount(kBackgroundChars.size())},
        {"extents, flavour and bodies", joint},
    };
}

} // namespace enigme
