// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "enigme/cli.hpp"
#include "enigme/generate.hpp"
#include "enigme/grader.hpp"
#include "enigme/numeric.hpp"
#include "enigme/physics.hpp"
#include "enigme/sequence.hpp"
#include "enigme/textgrid.hpp"
#include "enigme/variations.hpp"
#include "support/micro_stepper.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unordered_set>

using namespace enigme;

namespace {

int failures = 0;

void report(bool ok, std::string_view name, const std::string& detail) {
    fmt::print("{} {} -- {}\n", ok ? "PASS" : "FAIL", name, detail);
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::string label(Category c, Dimension d) { return fmt::format("{} {}", to_string(c), d.label()); }

struct Shell {
    int status = -1;
    std::string out;
    double seconds = 0;
};

Shell shell(const std::string& command) {
    Shell r;
    const auto start = std::chrono::steady_clock::now();
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int raw = ::pclose(pipe);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run(args, out, err);
    return out.str();
}

bool well_formed(Category c, const std::string& text) {
    if (c == Category::numeric) {
        return std::count(text.begin(), text.end(), kMaskChar) == 1 &&
               text.find("Words used in the paragraph:") != std::string::npos;
    }
    try {
        return split_frames_prompt(text).size() == 3;
    } catch (const std::exception&) {
        return false;
    }
}

void headline_commands() {
    const std::vector<std::pair<Category, Dimension>> commands{
        {Category::numeric, Dimension(2)},
        {Category::sequence, Dimension(2)},
        {Category::physics, Dimension(1)}};
    bool ok = true;
    std::string detail;
    for (const auto& [c, d] : commands) {
        const auto r = shell(fmt::format("{} {} {} 2>/dev/null", ENIGME_BINARY, to_string(c), d.label()));
        const bool good = r.status == 0 && well_formed(c, r.out) && r.seconds < 1.0;
        ok = ok && good;
        detail += fmt::format("{}{}: exit {} in {:.3f}s{}", detail.empty() ? "" : "; ",
                              label(c, d), r.status, r.seconds, good ? "" : " (bad)");
    }
    report(ok, "headline commands", detail);
}

void determinism() {
    int mismatched = 0;
    int golden_missing = 0;
    int golden_differs = 0;
    for (Category c : all_categories) {
        for (Dimension d : all_dimensions) {
            const std::vector<std::string> args{std::string(to_string(c)), d.label(), "--seed", "42",
                                                "--count", "100", "--format", "jsonl",
                                                "--with-solution"};
            int code_a = 0;
            int code_b = 0;
            const auto a = cli_output(args, code_a);
            const auto b = cli_output(args, code_b);
            mismatched += (a != b || code_a != 0 || code_b != 0);

            auto text_args = args;
            text_args.resize(6);
            const auto ta = cli_output(text_args, code_a);
            const auto tb = cli_output(text_args, code_b);
            mismatched += ta != tb;

            const auto path =
                fmt::format("{}/{}_{}.jsonl", ENIGME_GOLDEN_DIR, to_string(c), d.label());
            std::ifstream in(path, std::ios::binary);
            if (!in) {
                ++golden_missing;
                continue;
            }
            std::stringstream golden;
            golden << in.rdbuf();
            golden_differs += golden.str() != a;
        }
    }
    report(mismatched == 0 && golden_missing == 0 && golden_differs == 0, "determinism",
           fmt::format("9 commands x 2 formats run twice: {} mismatches; golden files: {} missing, "
                       "{} differ",
                       mismatched, golden_missing, golden_differs));
}

void numeric_oracle() {
    int wrong = 0;
    int errors = 0;
    for (Dimension d : all_dimensions) {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const auto p = generate(Category::numeric, d, seed);
            try {
                wrong += std::to_string(solve_from_prompt(p.prompt).value) != p.solution;
            } catch (const std::exception&) {
                ++errors;
            }
        }
    }
    report(wrong == 0 && errors == 0, "numeric oracle",
           fmt::format("3000 puzzles: {} mismatches, {} unsolvable prompts", wrong, errors));
}

void sequence_consistency() {
    int bad = 0;
    for (Dimension d : all_dimensions) {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const auto p = generate(Category::sequence, d, seed);
            try {
                const auto rule = rule_from_meta(p.meta);
                const char bg = p.meta.at("background")[0];
                std::vector<Grid> frames;
                for (const auto& t : split_frames_prompt(p.prompt)) {
                    frames.push_back(parse(t, bg));
                }
                frames.push_back(parse(p.solution, bg));
                bool ok = frames.size() == 4 && frames[0] != frames[1];
                for (std::size_t i = 0; ok && i + 1 < frames.size(); ++i) {
                    ok = apply_rule(rule, frames[i]) == frames[i + 1];
                }
                bad += !ok;
            } catch (const std::exception&) {
                ++bad;
            }
        }
    }
    report(bad == 0, "sequence consistency", fmt::format("3000 puzzles: {} inconsistent", bad));
}

// Every body glyph exactly once, nothing else drawn.
bool glyphs_intact(const Grid& g, const std::vector<Body>& bodies) {
    if (g.foreground_count() != bodies.size()) {
        return false;
    }
    return std::all_of(bodies.begin(), bodies.end(), [&](const Body& b) {
        return std::count(g.cells().begin(), g.cells().end(), b.glyph) == 1;
    });
}

void physics_oracle() {
    int wrong = 0;
    int invariant = 0;
    for (Dimension d : all_dimensions) {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const auto p = generate(Category::physics, d, seed);
            try {
                const char bg = p.meta.at("background")[0];
                const auto flavour = p.meta.at("flavour");
                std::vector<World> states{world_from_meta(p.meta, "bodies")};
                for (int i = 0; i < 3; ++i) {
                    const auto next = oracle::micro_step(states.back());
                    if (!next) {
                        throw std::runtime_error("oracle could not resolve a frame");
                    }
                    states.push_back(*next);
                }
                auto texts = split_frames_prompt(p.prompt);
                texts.push_back(p.solution);
                for (std::size_t i = 0; i < texts.size(); ++i) {
                    const Grid shown = parse(texts[i], bg);
                    wrong += render(shown) != render(paint(states[i]));
                    invariant += !(shown.extents() == states[0].extents) ||
                                 !glyphs_intact(shown, states[0].bodies);
                }
                for (std::size_t i = 0; i + 1 < states.size(); ++i) {
                    for (std::size_t k = 0; k < states[i].bodies.size(); ++k) {
                        const auto& a = states[i].bodies[k];
                        const auto& b = states[i + 1].bodies[k];
                        for (int x = 0; x < 3; ++x) {
                            const int before = std::abs(a.velocity[x]);
                            const int after = std::abs(b.velocity[x]);
                            if (flavour == "uniform" || flavour == "bounce") {
                                invariant += before != after;
                            } else if (flavour == "deceleration") {
                                invariant += after > before;
                            }
                        }
                    }
                }
                if (flavour == "collision") {
                    // exchanges permute the velocity vectors
                    for (std::size_t i = 0; i + 1 < states.size(); ++i) {
                        std::vector<Coord> x;
                        std::vector<Coord> y;
                        for (const auto& b : states[i].bodies) {
                            Coord v;
                            for (int a = 0; a < 3; ++a) {
                                v[a] = std::abs(b.velocity[a]);
                            }
                            x.push_back(v);
                        }
                        for (const auto& b : states[i + 1].bodies) {
                            Coord v;
                            for (int a = 0; a < 3; ++a) {
                                v[a] = std::abs(b.velocity[a]);
                            }
                            y.push_back(v);
                        }
                        std::sort(x.begin(), x.end());
                        std::sort(y.begin(), y.end());
                        invariant += x != y;
                    }
                }
            } catch (const std::exception&) {
                ++wrong;
            }
        }
    }
    report(wrong == 0 && invariant == 0, "physics oracle",
           fmt::format("3000 puzzles replayed by a {}-tick micro-stepper: {} frame mismatches, "
                       "{} invariant violations",
                       oracle::kTicks, wrong, invariant));
}

void variation_capacity() {
    const std::vector<std::tuple<Category, Dimension, BigCount>> floors{
        {Category::numeric, Dimension(1), BigCount(100000)},
        {Category::sequence, Dimension(1), BigCount(1000000)},
        {Category::physics, Dimension(1), BigCount(1000000)}};
    bool ok = true;
    std::string detail;
    for (Category c : all_categories) {
        for (Dimension d : all_dimensions) {
            const auto e = estimate_variations(c, d);
            std::string mark;
            for (const auto& [fc, fd, floor] : floors) {
                if (fc == c && fd == d) {
                    const bool met = e.cardinality >= floor;
                    ok = ok && met;
                    mark = met ? " (>= floor)" : " (below floor)";
                }
            }
            detail += fmt::format("{}{}={}{}", detail.empty() ? "" : ", ", label(c, d),
                                  scientific(e.cardinality), mark);
        }
    }
    report(ok, "variation capacity", detail);
}

void duplicate_rate() {
    auto seeds = make_rng(20261017);
    bool ok = true;
    std::string detail;
    for (Category c : all_categories) {
        for (Dimension d : all_dimensions) {
            std::unordered_set<std::string> seen;
            const int n = 10000;
            int dups = 0;
            for (int i = 0; i < n; ++i) {
                dups += !seen.insert(generate(c, d, seeds.next()).prompt).second;
            }
            const double rate = 100.0 * dups / n;
            const double limit = (c == Category::physics && d.value() == 3) ? 2.0 : 1.0;
            ok = ok && rate < limit;
            detail += fmt::format("{}{} {:.2f}%", detail.empty() ? "" : ", ", label(c, d), rate);
        }
    }
    report(ok, "duplicate rate", detail);
}

void grid_round_trip() {
    auto rng = make_rng(77);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const Extents e{static_cast<int>(rng.draw_range(1, 16)),
                        static_cast<int>(rng.draw_range(1, 9)),
                        static_cast<int>(rng.draw_range(1, 5))};
        const char bg = kBackgroundChars[rng.draw_index(kBackgroundChars.size())];
        std::string cells(e.cell_count(), bg);
        for (auto& ch : cells) {
            if (rng.draw_chance(1, 4)) {
                ch = kForegroundChars[rng.draw_index(kForegroundChars.size())];
            }
        }
        const Grid g(e, bg, std::move(cells));
        try {
            bad += !(parse(render(g), bg) == g);
        } catch (const std::exception&) {
            ++bad;
        }
    }
    report(bad == 0, "grid round trip", fmt::format("10000 random grids: {} failed", bad));
}

void grader_suite() {
    int bad = 0;
    int checks = 0;
    auto expect = [&](bool ok) {
        ++checks;
        bad += !ok;
    };
    auto score = [](std::string_view s, std::string_view c, GradeMode m) {
        return grade(s, c, m).score;
    };
    expect(score("6", "6", GradeMode::exact) == 1);
    expect(score("...X\n", "...X \r\n", GradeMode::normalized) == 1);
    expect(score("6", "The answer is 6.", GradeMode::normalized) == 1);
    expect(score("6", "16", GradeMode::normalized) == 0);
    expect(score("6", "2 or 6", GradeMode::normalized) == 0);

    auto rng = make_rng(99);
    const std::string noise = " \r\n.X0";
    for (Category c : all_categories) {
        for (Dimension d : all_dimensions) {
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                const auto s = generate(c, d, seed).solution;
                expect(score(s, s, GradeMode::exact) == 1);
                expect(score(s, s, GradeMode::normalized) == 1);
                std::string m = s;
                m.insert(rng.draw_index(m.size() + 1), 1, noise[rng.draw_index(noise.size())]);
                expect(score(s, m, GradeMode::exact) == 0 || score(s, m, GradeMode::normalized) == 1);
            }
        }
    }
    report(bad == 0, "grader suite", fmt::format("{} checks, {} failed", checks, bad));
}

} // namespace

int main() {
    headline_commands();
    determinism();
    numeric_oracle();
    sequence_consistency();
    physics_oracle();
    variation_capacity();
    duplicate_rate();
    grid_round_trip();
    grader_suite();
    fmt::print("{} criteria failed\n", failures);
    return failures;
}
