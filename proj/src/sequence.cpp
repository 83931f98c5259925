#include "enigme/sequence.hpp"

#include "enigme/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>

namespace enigme {

namespace {

constexpr int kMaxAttempts = 10000;
constexpr std::array<char, 3> kAxisNames{'x', 'y', 'z'};

int wrap_index(int value, int size) noexcept { return ((value % size) + size) % size; }

int active_axes(const Extents& e) noexcept { return e.depth > 1 ? 3 : e.height > 1 ? 2 : 1; }

Grid translate(const SequenceRule& rule, const Grid& frame) {
    Grid out(frame.extents(), frame.background());
    const auto& e = frame.extents();
    for (std::size_t i = 0; i < frame.cells().size(); ++i) {
        const Coord c = frame.coord(i);
        const Coord moved{wrap_index(c[0] + rule.offset[0], e.width),
                          wrap_index(c[1] + rule.offset[1], e.height),
                          wrap_index(c[2] + rule.offset[2], e.depth)};
        out.set(moved, frame.cells()[i]);
    }
    return out;
}

Grid rotate_cycle(const SequenceRule& rule, const Grid& frame) {
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < frame.cells().size(); ++i) {
        if (!frame.is_background_at(i)) {
            slots.push_back(i);
        }
    }
    Grid out = frame;
    const auto n = static_cast<int>(slots.size());
    for (int k = 0; k < n; ++k) {
        const auto to = slots[static_cast<std::size_t>(wrap_index(k + rule.step, n))];
        out.set(frame.coord(to), frame.cells()[slots[static_cast<std::size_t>(k)]]);
    }
    return out;
}

Grid char_cycle(const SequenceRule& rule, const Grid& frame) {
    std::string cells = frame.cells();
    for (auto& c : cells) {
        const auto at = rule.cycle.find(c);
        if (c != frame.background() && at != std::string::npos) {
            c = rule.cycle[(at + 1) % rule.cycle.size()];
        }
    }
    return Grid(frame.extents(), frame.background(), std::move(cells));
}

Grid grow(const Grid& frame) {
    Grid out = frame;
    for (std::size_t i = 0; i < frame.cells().size(); ++i) {
        if (!frame.is_background_at(i)) {
            continue;
        }
        const Coord c = frame.coord(i);
        for (int axis = 0; axis < 3; ++axis) {
            bool filled = false;
            for (int dir : {-1, 1}) {
                Coord n = c;
                n[static_cast<std::size_t>(axis)] += dir;
                if (frame.contains(n) && frame.at(n) != frame.background()) {
                    out.set(c, frame.at(n));
                    filled = true;
                    break;
                }
            }
            if (filled) {
                break;
            }
        }
    }
    return out;
}

Grid reflect(const SequenceRule& rule, const Grid& frame) {
    Grid out(frame.extents(), frame.background());
    const int size = frame.extents().along(rule.axis);
    for (std::size_t i = 0; i < frame.cells().size(); ++i) {
        Coord c = frame.coord(i);
        auto& v = c[static_cast<std::size_t>(rule.axis)];
        v = size - 1 - v;
        out.set(c, frame.cells()[i]);
    }
    return out;
}

int parse_int(std::string_view text) {
    int value = 0;
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw FormatError(fmt::format("expected an integer, got \"{}\"", text));
    }
    return value;
}

const std::string& meta_at(const Meta& meta, const std::string& key) {
    const auto it = meta.find(key);
    if (it == meta.end()) {
        throw FormatError("meta has no \"" + key + "\" entry");
    }
    return it->second;
}

BigCount power(unsigned base, std::size_t exponent) {
    return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exponent));
}

// Every extents choice for a dimension, as cell counts with the axis count.
std::vector<Extents> extents_choices(Dimension dimension, const SequenceConfig& config) {
    const auto [lo, hi] = config.side_range[static_cast<std::size_t>(dimension.value() - 1)];
    std::vector<Extents> out;
    const int d = dimension.value();
    for (int w = lo; w <= hi; ++w) {
        for (int h = d >= 2 ? lo : 1; h <= (d >= 2 ? hi : 1); ++h) {
            for (int z = d >= 3 ? lo : 1; z <= (d >= 3 ? hi : 1); ++z) {
                out.push_back({w, h, z});
            }
        }
    }
    return out;
}

} // namespace

std::string_view to_string(RuleKind kind) {
    switch (kind) {
    case RuleKind::translate: return "translate";
    case RuleKind::rotate_cycle: return "rotate_cycle";
    case RuleKind::char_cycle: return "char_cycle";
    case RuleKind::grow: return "grow";
    case RuleKind::reflect_alternate: return "reflect_alternate";
    }
    return "unknown";
}

Grid apply_rule(const SequenceRule& rule, const Grid& frame) {
    if (!(frame.extents() == rule.extents)) {
        throw ContractError(fmt::format("frame extents {} do not match rule extents {}",
                                        format_extents(frame.extents(), 3),
                                        format_extents(rule.extents, 3)));
    }
    switch (rule.kind) {
    case RuleKind::translate: return translate(rule, frame);
    case RuleKind::rotate_cycle: return rotate_cycle(rule, frame);
    case RuleKind::char_cycle: return char_cycle(rule, frame);
    case RuleKind::grow: return grow(frame);
    case RuleKind::reflect_alternate: return reflect(rule, frame);
    }
    throw ContractError("unknown rule kind");
}

std::string solve_sequence(const SequenceSpec& spec) {
    Grid frame = spec.initial;
    for (int i = 0; i < spec.shown_frames; ++i) {
        frame = apply_rule(spec.rule, frame);
    }
    return render(frame);
}

std::string format_extents(const Extents& extents, int axes) {
    switch (axes) {
    case 1: return fmt::format("{}", extents.width);
    case 2: return fmt::format("{}x{}", extents.width, extents.height);
    default: return fmt::format("{}x{}x{}", extents.width, extents.height, extents.depth);
    }
}

Extents parse_extents(std::string_view text) {
    std::array<int, 3> sides{1, 1, 1};
    std::size_t axis = 0;
    while (true) {
        if (axis == 3) {
            throw FormatError(fmt::format("too many axes in extents \"{}\"", text));
        }
        const auto x = text.find('x');
        sides[axis++] = parse_int(text.substr(0, x));
        if (x == std::string_view::npos) {
            break;
        }
        text.remove_prefix(x + 1);
    }
    return {sides[0], sides[1], sides[2]};
}

std::string rule_params(const SequenceRule& rule) {
    const int axes = active_axes(rule.extents);
    switch (rule.kind) {
    case RuleKind::translate: {
        std::string out;
        for (int a = 0; a < axes; ++a) {
            out += fmt::format("{}d{}={}", a ? "," : "", kAxisNames[static_cast<std::size_t>(a)],
                               rule.offset[static_cast<std::size_t>(a)]);
        }
        return out;
    }
    case RuleKind::rotate_cycle: return fmt::format("step={}", rule.step);
    case RuleKind::char_cycle: return "cycle=" + rule.cycle;
    case RuleKind::grow: return "none";
    case RuleKind::reflect_alternate:
        return fmt::format("axis={}", kAxisNames[static_cast<std::size_t>(rule.axis)]);
    }
    return {};
}

SequenceRule rule_from_meta(const Meta& meta) {
    SequenceRule rule;
    const auto& kind = meta_at(meta, "rule");
    const auto found = std::find_if(all_rule_kinds.begin(), all_rule_kinds.end(),
                                    [&](RuleKind k) { return to_string(k) == kind; });
    if (found == all_rule_kinds.end()) {
        throw FormatError("unknown rule \"" + kind + "\"");
    }
    rule.kind = *found;
    rule.extents = parse_extents(meta_at(meta, "extents"));

    std::string_view params = meta_at(meta, "params");
    while (!params.empty() && params != "none") {
        const auto comma = params.find(',');
        const auto item = params.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError(fmt::format("bad rule parameter \"{}\"", item));
        }
        const auto key = item.substr(0, eq);
        const auto value = item.substr(eq + 1);
        if (key == "step") {
            rule.step = parse_int(value);
        } else if (key == "cycle") {
            rule.cycle = std::string(value);
        } else if (key == "axis" && value.size() == 1) {
            const auto a = std::find(kAxisNames.begin(), kAxisNames.end(), value[0]);
            if (a == kAxisNames.end()) {
                throw FormatError(fmt::format("bad axis \"{}\"", value));
            }
            rule.axis = static_cast<int>(a - kAxisNames.begin());
        } else if (key.size() == 2 && key[0] == 'd') {
            const auto a = std::find(kAxisNames.begin(), kAxisNames.end(), key[1]);
            if (a == kAxisNames.end()) {
                throw FormatError(fmt::format("bad offset \"{}\"", key));
            }
            rule.offset[static_cast<std::size_t>(a - kAxisNames.begin())] = parse_int(value);
        } else {
            throw FormatError(fmt::format("unknown rule parameter \"{}\"", key));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        params.remove_prefix(comma + 1);
    }
    return rule;
}

std::string frames_prompt(const std::vector<Grid>& frames) {
    std::string out;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (i > 0) {
            out += kFrameSeparator;
            out += '\n';
        }
        out += render(frames[i]);
    }
    out += kNextFrameQuestion;
    out += '\n';
    return out;
}

std::vector<std::string> split_frames_prompt(std::string_view prompt) {
    std::vector<std::string> frames(1);
    while (!prompt.empty()) {
        const auto nl = prompt.find('\n');
        const auto line = prompt.substr(0, nl);
        if (line == kNextFrameQuestion) {
            return frames;
        }
        if (line == kFrameSeparator) {
            frames.emplace_back();
        } else {
            frames.back().append(line);
            frames.back() += '\n';
        }
        if (nl == std::string_view::npos) {
            break;
        }
        prompt.remove_prefix(nl + 1);
    }
    throw FormatError("frames prompt has no question line");
}

const SequenceConfig& default_sequence_config() {
    static const SequenceConfig config;
    return config;
}

Puzzle generate_sequence(Dimension dimension, RngStream& rng) {
    return generate_sequence(dimension, rng, default_sequence_config());
}

Puzzle generate_sequence(Dimension dimension, RngStream& rng, const SequenceConfig& config) {
    const int axes = dimension.value();
    const auto [lo, hi] = config.side_range[static_cast<std::size_t>(axes - 1)];

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Extents extents;
        extents.width = static_cast<int>(rng.draw_range(lo, hi));
        if (axes >= 2) {
            extents.height = static_cast<int>(rng.draw_range(lo, hi));
        }
        if (axes >= 3) {
            extents.depth = static_cast<int>(rng.draw_range(lo, hi));
        }
        const char background = kBackgroundChars[rng.draw_index(kBackgroundChars.size())];

        SequenceRule rule;
        rule.kind = all_rule_kinds[rng.draw_index(all_rule_kinds.size())];
        rule.extents = extents;
        std::string ink(kForegroundChars);
        switch (rule.kind) {
        case RuleKind::translate:
            do {
                for (int a = 0; a < axes; ++a) {
                    rule.offset[static_cast<std::size_t>(a)] =
                        static_cast<int>(rng.draw_range(-config.max_offset, config.max_offset));
                }
            } while (rule.offset == Coord{0, 0, 0});
            break;
        case RuleKind::rotate_cycle: rule.step = rng.draw_chance(1, 2) ? 1 : -1; break;
        case RuleKind::char_cycle: {
            const auto length = rng.draw_range(config.min_cycle, config.max_cycle);
            std::string pool(kForegroundChars);
            for (std::int64_t i = 0; i < length; ++i) {
                const auto at = rng.draw_index(pool.size());
                rule.cycle += pool[at];
                pool.erase(at, 1);
            }
            ink = rule.cycle;
            break;
        }
        case RuleKind::grow: break;
        case RuleKind::reflect_alternate:
            rule.axis = static_cast<int>(rng.draw_index(static_cast<std::size_t>(axes)));
            break;
        }

        std::string cells(extents.cell_count(), background);
        for (auto& c : cells) {
            if (rng.draw_chance(1, static_cast<std::uint64_t>(config.foreground_odds))) {
                c = ink[rng.draw_index(ink.size())];
            }
        }
        Grid initial(extents, background, std::move(cells));
        const auto fg = initial.foreground_count();
        if (fg == 0 || fg == initial.cells().size()) {
            continue;
        }

        std::vector<Grid> frames{initial};
        for (int i = 0; i < config.shown_frames; ++i) {
            frames.push_back(apply_rule(rule, frames.back()));
        }
        if (frames[1] == frames[0]) {
            continue;
        }

        Puzzle p;
        p.category = Category::sequence;
        p.dimension = dimension;
        p.solution = render(frames.back());
        frames.pop_back();
        p.prompt = frames_prompt(frames);
        p.meta = {
            {"rule", std::string(to_string(rule.kind))},
            {"params", rule_params(rule)},
            {"extents", format_extents(extents, axes)},
            {"background", std::string(1, background)},
            {"shown_frames", std::to_string(config.shown_frames)},
        };
        return p;
    }
    throw GenerationError("sequence generator exhausted its redraw budget");
}

std::vector<ParameterAxis> sequence_parameter_axes(Dimension dimension,
                                                   const SequenceConfig& config) {
    const auto axes = static_cast<std::size_t>(dimension.value());
    const unsigned fg = static_cast<unsigned>(kForegroundChars.size());

    // Rule choices that paint with the full foreground set.
    const BigCount offsets = power(static_cast<unsigned>(2 * config.max_offset + 1), axes) - 1;
    const BigCount other_rules = offsets + 2 /* rotate step */ + 1 /* grow */ + axes /* mirror */;

    BigCount joint = 0;
    for (const auto& e : extents_choices(dimension, config)) {
        const auto n = e.cell_count();
        // Patterns that are neither all background nor all foreground.
        BigCount total = other_rules * (power(fg + 1, n) - 1 - power(fg, n));
        for (int length = config.min_cycle; length <= config.max_cycle; ++length) {
            const auto l = static_cast<unsigned>(length);
            total += permutations(fg, l) * (power(l + 1, n) - 1 - power(l, n));
        }
        joint += total;
    }
    return {
        {"background", BigCount(kBackgroundChars.size())},
        {"extents, rule and pattern", joint},
    };
}

} // namespace enigme
