#include "enigme/errors.hpp"
#include "enigme/physics.hpp"
#include "enigme/sequence.hpp"
#include "enigme/variations.hpp"
#include "support/micro_stepper.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace enigme;

namespace {

World line(int width, std::vector<Body> bodies) {
    World w;
    w.extents = {width, 1, 1};
    w.axes = 1;
    w.bodies = std::move(bodies);
    return w;
}

Body body(char glyph, int pos, int vel, int acc = 0) {
    Body b;
    b.glyph = glyph;
    b.position = {pos, 0, 0};
    b.velocity = {vel, 0, 0};
    b.acceleration = {acc, 0, 0};
    return b;
}

World random_world(RngStream& rng, int axes) {
    World w;
    w.axes = axes;
    w.extents.width = static_cast<int>(rng.draw_range(4, 9));
    if (axes >= 2) {
        w.extents.height = static_cast<int>(rng.draw_range(4, 7));
    }
    const int n = static_cast<int>(rng.draw_range(1, 3));
    const std::string glyphs = "ABC";
    while (static_cast<int>(w.bodies.size()) < n) {
        Body b;
        b.glyph = glyphs[w.bodies.size()];
        for (int a = 0; a < axes; ++a) {
            b.position[a] = static_cast<int>(rng.draw_range(0, w.extents.along(a) - 1));
            b.velocity[a] = static_cast<int>(rng.draw_range(-2, 2));
            b.acceleration[a] = static_cast<int>(rng.draw_range(-1, 1));
        }
        const bool taken = std::any_of(w.bodies.begin(), w.bodies.end(),
                                       [&](const Body& o) { return o.position == b.position; });
        if (!taken) {
            w.bodies.push_back(b);
        }
    }
    return w;
}

} // namespace

TEST_CASE("uniform motion") {
    const auto next = step(line(8, {body('X', 2, 1)}));
    CHECK(next.bodies[0].position[0] == 3);
    CHECK(next.bodies[0].velocity[0] == 1);
}

TEST_CASE("wall reflection folds the overshoot back") {
    const auto next = step(line(5, {body('X', 4, 1)}));
    CHECK(next.bodies[0].position[0] == 3);
    CHECK(next.bodies[0].velocity[0] == -1);

    const auto low = step(line(5, {body('X', 1, -2)}));
    CHECK(low.bodies[0].position[0] == 1);
    CHECK(low.bodies[0].velocity[0] == 2);
}

TEST_CASE("head-on neighbours exchange velocities in place") {
    const auto next = step(line(8, {body('A', 2, 1), body('B', 3, -1)}));
    CHECK(next.bodies[0].position[0] == 2);
    CHECK(next.bodies[1].position[0] == 3);
    CHECK(next.bodies[0].velocity[0] == -1);
    CHECK(next.bodies[1].velocity[0] == 1);
}

TEST_CASE("bodies aimed at the same cell collide") {
    const auto out = try_step(line(8, {body('A', 1, 1), body('B', 3, -1)}));
    REQUIRE(out);
    CHECK(out->collisions == 1);
    CHECK(out->world.bodies[0].position[0] == 1);
    CHECK(out->world.bodies[0].velocity[0] == -1);
}

TEST_CASE("a fast body cannot pass through a slow one") {
    // A's path crosses B's cell halfway through the frame.
    const auto out = try_step(line(8, {body('A', 0, 2), body('B', 1, 0)}));
    REQUIRE(out);
    CHECK(out->collisions == 1);
    CHECK(out->world.bodies[0].position[0] == 0);
    CHECK(out->world.bodies[0].velocity[0] == 0);
    CHECK(out->world.bodies[1].velocity[0] == 2);
}

TEST_CASE("a body in two collisions is unresolvable") {
    const auto w = line(8, {body('A', 1, 1), body('B', 2, 0), body('C', 3, -1)});
    CHECK_FALSE(try_step(w));
    CHECK_THROWS_AS(step(w), UnresolvableCollision);
}

TEST_CASE("acceleration and deceleration follow velocity-then-position order") {
    SUBCASE("speeding up is capped at 2") {
        World w = line(16, {body('X', 0, 0, 1)});
        std::vector<int> moves;
        for (int i = 0; i < 4; ++i) {
            const int before = w.bodies[0].position[0];
            w = step(w);
            moves.push_back(w.bodies[0].position[0] - before);
        }
        CHECK(moves == std::vector<int>{1, 2, 2, 2});
    }
    SUBCASE("braking stops at zero and drops the acceleration") {
        World w = line(16, {body('X', 2, 2, -1)});
        std::vector<int> moves;
        for (int i = 0; i < 3; ++i) {
            const int before = w.bodies[0].position[0];
            w = step(w);
            moves.push_back(w.bodies[0].position[0] - before);
        }
        CHECK(moves == std::vector<int>{1, 0, 0});
        CHECK(w.bodies[0].acceleration[0] == 0);
    }
}

TEST_CASE("bounce series") {
    World w = line(5, {body('X', 2, 1)});
    std::vector<int> seen{2};
    for (int i = 0; i < 3; ++i) {
        w = step(w);
        seen.push_back(w.bodies[0].position[0]);
    }
    CHECK(seen == std::vector<int>{2, 3, 4, 3});
    CHECK(w.bodies[0].velocity[0] == -1);
}

TEST_CASE("validate") {
    CHECK_THROWS_AS(validate(line(3, {body('X', 0, 1)})), ContractError);
    CHECK_THROWS_AS(validate(line(8, {body('X', 9, 1)})), ContractError);
    CHECK_THROWS_AS(validate(line(8, {body('X', 0, 3)})), ContractError);
    CHECK_THROWS_AS(validate(line(8, {body('X', 0, 1), body('X', 2, 1)})), ContractError);
    CHECK_THROWS_AS(validate(line(8, {body('X', 0, 1), body('Y', 0, 1)})), ContractError);
    CHECK_THROWS_AS(validate(line(8, {body('a', 0, 1)})), ContractError);
    CHECK_NOTHROW(validate(line(4, {body('X', 3, -2, 1)})));
}

TEST_CASE("body lists round-trip through meta text") {
    Body b;
    b.glyph = 'Q';
    b.position = {2, 5, 0};
    b.velocity = {-1, 2, 0};
    b.acceleration = {0, -1, 0};
    const auto text = format_bodies({b, body('R', 1, 0)}, 2);
    CHECK(text == "glyph=Q,pos=2|5,vel=-1|2,acc=0|-1;glyph=R,pos=1|0,vel=0|0,acc=0|0");
    const auto back = parse_bodies(text, 2);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == b);
    CHECK_THROWS_AS(parse_bodies("glyph=Q,pos=1", 2), FormatError);
}

TEST_CASE("try_step agrees with the micro-stepper on random worlds") {
    auto rng = make_rng(31337);
    int resolved = 0;
    int collided = 0;
    for (int i = 0; i < 10000; ++i) {
        const World w = random_world(rng, 1 + i % 2);
        const auto fast = try_step(w);
        const auto slow = oracle::micro_step(w);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            REQUIRE(fast->world == *slow);
            ++resolved;
            collided += fast->collisions > 0;
        }
    }
    CHECK(resolved > 8000);
    CHECK(collided > 300);
}

TEST_CASE("with no acceleration, speeds per axis survive reflections") {
    auto rng = make_rng(5);
    for (int i = 0; i < 500; ++i) {
        World w = random_world(rng, 2);
        w.bodies.resize(1);
        w.bodies[0].acceleration = {0, 0, 0};
        const auto v0 = w.bodies[0].velocity;
        for (int s = 0; s < 12; ++s) {
            w = step(w);
            for (int a = 0; a < 2; ++a) {
                CHECK(std::abs(w.bodies[0].velocity[a]) == std::abs(v0[a]));
            }
        }
    }
}

TEST_CASE("collision-free frames run backwards") {
    auto rng = make_rng(6);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        World w = random_world(rng, 1 + i % 2);
        for (auto& b : w.bodies) {
            b.acceleration = {0, 0, 0};
        }
        const auto out = try_step(w);
        if (!out || out->collisions > 0) {
            continue;
        }
        World back = out->world;
        for (auto& b : back.bodies) {
            for (auto& v : b.velocity) {
                v = -v;
            }
        }
        CHECK(paint(step(back)) == paint(w));
        ++checked;
    }
    CHECK(checked > 1000);
}

TEST_CASE("generated puzzles replay under the micro-stepper") {
    for (Dimension d : all_dimensions) {
        std::set<std::string> flavours;
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            CAPTURE(seed);
            auto rng = make_rng(seed);
            const auto p = generate_physics(d, rng);
            World w = world_from_meta(p.meta, "bodies");
            const auto frames = split_frames_prompt(p.prompt);
            REQUIRE(frames.size() == 3);
            for (const auto& frame : frames) {
                CHECK(render(paint(w)) == frame);
                const auto next = oracle::micro_step(w);
                REQUIRE(next);
                w = *next;
            }
            CHECK(render(paint(w)) == p.solution);
            CHECK(solve_physics(world_from_meta(p.meta, "state")) == p.solution);
            flavours.insert(p.meta.at("flavour"));
        }
        CHECK(flavours.size() == all_flavours.size());
    }
}

TEST_CASE("variation estimates") {
    CHECK(estimate_variations(Category::physics, Dimension(1)).cardinality >= 1000000);
    CHECK(estimate_variations(Category::physics, Dimension(3)).cardinality >
          estimate_variations(Category::physics, Dimension(2)).cardinality);
}
