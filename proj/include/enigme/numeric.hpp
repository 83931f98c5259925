#pragma once

#include "enigme/category.hpp"
#include "enigme/puzzle.hpp"
#include "enigme/rng.hpp"
#include "enigme/variations.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace enigme {

enum class ArithmeticOp : std::uint8_t { sum, product };

std::string_view to_string(ArithmeticOp op);

/// Character that replaces the hidden letter in a numeric prompt.
inline constexpr char kMaskChar = '_';

/// Quantities a numeric puzzle combines. Dimension d uses the first d of these.
enum class NumericQuantity : std::uint8_t { word_position, char_position, alphabet_position };

std::vector<NumericQuantity> quantities_for(Dimension dimension);

struct Substitution {
    int word_index = 1; // 1-based position in the sequence of words
    int char_index = 1; // 1-based position of the masked letter within its word
    char original_char = 'a';
    char mask_char = kMaskChar;

    friend bool operator==(const Substitution&, const Substitution&) = default;
};

struct NumericSpec {
    std::uint64_t template_id = 0;
    std::vector<Substitution> substitutions;
    ArithmeticOp op = ArithmeticOp::sum;
    Dimension dimension{1};
};

struct NumericAnswer {
    std::int64_t value = 0;
    friend bool operator==(const NumericAnswer&, const NumericAnswer&) = default;
};

/// One interchangeable wording for a position in the instruction paragraph.
/// Sentences that name the arithmetic operation carry it in `op`.
struct Sentence {
    std::string text;
    std::optional<ArithmeticOp> op;
};

using SentenceSlot = std::vector<Sentence>;

/// Template bank for numeric puzzles: for each dimension, the paragraph is one
/// sentence drawn from every slot, in slot order. For dimensions 2 and 3
/// exactly one slot must carry the operation.
struct NumericConfig {
    std::array<std::vector<SentenceSlot>, 3> slots;

    [[nodiscard]] const std::vector<SentenceSlot>& slots_for(Dimension d) const {
        return slots[static_cast<std::size_t>(d.value() - 1)];
    }
};

const NumericConfig& default_numeric_config();

/// A template instance: the chosen variant index for every slot.
struct TemplateChoice {
    std::vector<std::size_t> variants;
};

/// Mixed-radix encoding of the variant choices, first slot most significant.
std::uint64_t template_id(const std::vector<SentenceSlot>& slots, const TemplateChoice& choice);

/// Paragraph text for a template instance, wrapped at 72 columns.
std::string assemble_paragraph(const std::vector<SentenceSlot>& slots, const TemplateChoice& choice);

/// Letters of `paragraph` that may be masked: (word, char) positions whose
/// masked word has a single completion among the paragraph's own vocabulary.
std::vector<Substitution> maskable_positions(std::string_view paragraph);

/// Sorted distinct lowercase words of the paragraph, punctuation removed.
std::vector<std::string> paragraph_vocabulary(std::string_view paragraph);

NumericAnswer solve_numeric(const NumericSpec& spec);

/// Re-derives the answer from the prompt text alone. Throws FormatError when
/// the prompt has no mask, more than one, or an unrecoverable missing letter.
NumericAnswer solve_from_prompt(std::string_view prompt);

Puzzle generate_numeric(Dimension dimension, RngStream& rng);
Puzzle generate_numeric(Dimension dimension, RngStream& rng, const NumericConfig& config);

std::vector<ParameterAxis> numeric_parameter_axes(Dimension dimension, const NumericConfig& config);

} // namespace enigme
