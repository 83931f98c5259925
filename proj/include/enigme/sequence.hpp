#pragma once

#include "enigme/category.hpp"
#include "enigme/puzzle.hpp"
#include "enigme/rng.hpp"
#include "enigme/textgrid.hpp"
#include "enigme/variations.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace enigme {

enum class RuleKind : std::uint8_t { translate, rotate_cycle, char_cycle, grow, reflect_alternate };

inline constexpr std::array<RuleKind, 5> all_rule_kinds{RuleKind::translate, RuleKind::rotate_cycle,
                                                        RuleKind::char_cycle, RuleKind::grow,
                                                        RuleKind::reflect_alternate};

std::string_view to_string(RuleKind kind);

/// Hidden frame-to-frame transformation.
///
///  - translate: shift by `offset` per axis with toroidal wrap.
///  - rotate_cycle: glyphs move one foreground slot along the row-major list of
///    foreground cells (`step` = +1 forward, -1 backward); positions stay put.
///  - char_cycle: every foreground glyph advances one place in `cycle`.
///  - grow: von Neumann dilation by one cell, clipped at the borders. A new cell
///    copies the first foreground neighbour in the order -x, +x, -y, +y, -z, +z.
///  - reflect_alternate: mirror across `axis`, so frames alternate between the
///    pattern and its mirror image.
struct SequenceRule {
    RuleKind kind = RuleKind::translate;
    Extents extents;
    Coord offset{0, 0, 0};
    int step = 1;
    std::string cycle;
    int axis = 0;

    friend bool operator==(const SequenceRule&, const SequenceRule&) = default;
};

struct SequenceSpec {
    SequenceRule rule;
    Grid initial;
    int shown_frames = 3;
    CharPalette palette = kPalette;
    Dimension dimension{1};
};

/// Throws ContractError when the frame's extents differ from the rule's.
Grid apply_rule(const SequenceRule& rule, const Grid& frame);

/// Rendered frame after `shown_frames` applications.
std::string solve_sequence(const SequenceSpec& spec);

/// Parameter text stored in meta, e.g. "dx=1,dy=0" or "cycle=ABC".
std::string rule_params(const SequenceRule& rule);
/// Rebuilds a rule from the "rule", "params" and "extents" meta entries.
SequenceRule rule_from_meta(const Meta& meta);

std::string format_extents(const Extents& extents, int axes);
Extents parse_extents(std::string_view text);

/// Ranges the sequence generator draws from.
struct SequenceConfig {
    std::array<std::pair<int, int>, 3> side_range{{{8, 16}, {5, 9}, {3, 5}}};
    int shown_frames = 3;
    int min_cycle = 2;
    int max_cycle = 4;
    int max_offset = 2;
    /// Each cell becomes foreground with probability 1 / foreground_odds.
    int foreground_odds = 4;
};

const SequenceConfig& default_sequence_config();

Puzzle generate_sequence(Dimension dimension, RngStream& rng);
Puzzle generate_sequence(Dimension dimension, RngStream& rng, const SequenceConfig& config);

std::vector<ParameterAxis> sequence_parameter_axes(Dimension dimension, const SequenceConfig& config);

/// Frames prompt layout shared by sequence and physics puzzles: frames joined by
/// "---" lines, then the question line.
std::string frames_prompt(const std::vector<Grid>& frames);
/// Splits a frames prompt back into its rendered frames (question line removed).
std::vector<std::string> split_frames_prompt(std::string_view prompt);

inline constexpr std::string_view kFrameSeparator = "---";
inline constexpr std::string_view kNextFrameQuestion = "What is the next frame?";

} // namespace enigme
