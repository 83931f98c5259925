#include "enigme/numeric.hpp"

#include "enigme/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>

namespace enigme {

namespace {

constexpr std::size_t kWrapColumn = 72;
constexpr std::string_view kVocabularyHeader = "Words used in the paragraph:";

// Words that name the operation or the extra quantities. The prompt-only
// solver keys on these, so each may appear only in the slot that owns it.
constexpr std::array<std::string_view, 5> kSumWords{"add", "added", "addition", "sum", "total"};
constexpr std::array<std::string_view, 4> kProductWords{"multiply", "multiplied",
                                                        "multiplication", "product"};
constexpr std::string_view kCharPositionWord = "within";
constexpr std::string_view kAlphabetWord = "alphabet";

SentenceSlot plain(std::initializer_list<const char*> texts) {
    SentenceSlot slot;
    for (const char* t : texts) {
        slot.push_back({t, std::nullopt});
    }
    return slot;
}

SentenceSlot operation_slot() {
    return {
        {"Add these numbers together to get the answer.", ArithmeticOp::sum},
        {"The answer is the sum of these numbers.", ArithmeticOp::sum},
        {"Give the total you get when these numbers are added together.", ArithmeticOp::sum},
        {"Combine the numbers by addition and report the result.", ArithmeticOp::sum},
        {"Multiply these numbers together to get the answer.", ArithmeticOp::product},
        {"The answer is the product of these numbers.", ArithmeticOp::product},
        {"Give the result you get when these numbers are multiplied together.",
         ArithmeticOp::product},
        {"Combine the numbers by multiplication and report the result.", ArithmeticOp::product},
    };
}

NumericConfig build_default_config() {
    const SentenceSlot intro = plain({
        "This paragraph is a small puzzle about its own text.",
        "Read this paragraph carefully, because the puzzle is about the paragraph itself.",
        "The task below refers back to the very words you are reading now.",
        "Everything needed to solve this riddle is contained in this paragraph.",
        "This block of text hides a small numeric riddle inside its own words.",
        "You are looking at a puzzle that asks you to study the text of its own instructions.",
        "Treat this paragraph as both the question and the material you must examine.",
        "Here is a riddle whose answer comes entirely from the words in front of you.",
    });
    const SentenceSlot mask = plain({
        "Exactly one letter somewhere in this paragraph has been replaced by an underscore.",
        "One single letter in these sentences was removed, and an underscore now stands in its "
        "place.",
        "Somewhere in this text a letter has been hidden behind an underscore symbol.",
        "A single character of one word here has been swapped for an underscore.",
        "Before you saw it, one letter of one word in this paragraph was covered by an underscore.",
        "Look for the underscore, which marks the one letter that has gone missing from a word.",
    });
    const SentenceSlot counting = plain({
        "Words are separated by spaces, and the first word of this paragraph counts as word one.",
        "Count words from the start of this paragraph, treating anything between two spaces as "
        "one word.",
        "Punctuation belongs to the word it touches, and word numbering begins at one with the "
        "opening word.",
        "When counting words, begin with the very first word of this paragraph as number one.",
        "Every group of characters between spaces is one word, and counting starts at one.",
        "Number the words in order from the beginning of the paragraph, starting with one.",
    });
    const SentenceSlot word_only = plain({
        "Your answer is the position of the word containing the underscore in the sequence of "
        "words.",
        "Find which word in the sequence of words holds the underscore and give its position.",
        "The answer is simply the position in the sequence of words of the word with the "
        "underscore.",
        "Work out the position of the damaged word in the sequence of words; that number is the "
        "answer.",
        "Report the position in the sequence of words of the word that contains the underscore.",
    });
    const SentenceSlot word_and_char = plain({
        "Take the position of the word containing the underscore in the sequence of words, and "
        "the position of the underscore within that word, counting characters from one.",
        "You need two numbers: the position of the damaged word in the sequence of words, and the "
        "position of the missing character within that word.",
        "Find the position in the sequence of words of the word with the underscore, then find "
        "the position of the underscore within the word itself.",
        "First note the position of the word holding the underscore, then note which character "
        "position the underscore occupies within that word.",
        "Two positions matter here: the place of the word holding the underscore in the sequence "
        "of words, and the place of the underscore within that word.",
    });
    const SentenceSlot all_three = plain({
        "Take three numbers: the position of the word containing the underscore in the sequence "
        "of words, the position of the underscore within that word, and the position of the "
        "missing letter in the alphabet, where a is one and z is twenty six.",
        "You need the position of the damaged word in the sequence of words, the position of the "
        "missing character within that word, and the place of the missing letter in the "
        "alphabet, counting a as one.",
        "Find the position in the sequence of words of the word with the underscore, the "
        "position of the underscore within the word itself, and the alphabet position of the "
        "hidden letter, with a as one.",
        "Note the position of the word holding the underscore, the character position of the "
        "underscore within that word, and the position of the missing letter in the alphabet, "
        "from a as one up to z as twenty six.",
        "Three positions matter here: the place of the damaged word in the sequence of words, the "
        "place of the underscore within that word, and the place of the hidden letter in the "
        "alphabet, starting from a as one.",
    });
    const SentenceSlot closing = plain({
        "Reply with the final number only.",
        "Write your answer as a single whole number.",
        "Respond with nothing but the number.",
        "Give just the number as your reply.",
        "Your reply should contain only that number.",
        "State the number and nothing else.",
    });

    NumericConfig config;
    config.slots[0] = {intro, mask, counting, word_only, closing};
    config.slots[1] = {intro, mask, counting, word_and_char, operation_slot(), closing};
    config.slots[2] = {intro, mask, counting, all_three, operation_slot(), closing};
    return config;
}

bool is_letter(char c) noexcept { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

char lower(char c) noexcept {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::vector<std::string_view> split_words(std::string_view text) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (i > start) {
            words.push_back(text.substr(start, i - start));
        }
    }
    return words;
}

// Lowercase word with trailing punctuation removed. Tokens never start with
// punctuation, so character indices are unchanged.
std::string bare_word(std::string_view token) {
    while (!token.empty() && !is_letter(token.back()) && token.back() != kMaskChar) {
        token.remove_suffix(1);
    }
    std::string word(token);
    std::transform(word.begin(), word.end(), word.begin(), lower);
    return word;
}

std::string wrap(const std::vector<std::string_view>& words) {
    std::string out;
    std::size_t column = 0;
    for (auto w : words) {
        if (column > 0 && column + 1 + w.size() > kWrapColumn) {
            out += '\n';
            column = 0;
        } else if (column > 0) {
            out += ' ';
            ++column;
        }
        out.append(w);
        column += w.size();
    }
    return out;
}

// Keys are words with one letter replaced by the mask; the count tells how many
// distinct vocabulary words share the key.
std::unordered_map<std::string, int> completion_counts(const std::vector<std::string>& vocabulary) {
    std::unordered_map<std::string, int> counts;
    for (const auto& word : vocabulary) {
        std::string key = word;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (!is_letter(word[i])) {
                continue;
            }
            key[i] = kMaskChar;
            ++counts[key];
            key[i] = word[i];
        }
    }
    return counts;
}

std::vector<std::string> vocabulary_of(const std::vector<std::string_view>& tokens) {
    std::set<std::string> unique;
    for (auto t : tokens) {
        auto w = bare_word(t);
        if (!w.empty()) {
            unique.insert(std::move(w));
        }
    }
    return {unique.begin(), unique.end()};
}

bool contains_word(const std::vector<std::string>& vocabulary, std::string_view word) {
    return std::binary_search(vocabulary.begin(), vocabulary.end(), word);
}

template <std::size_t N>
bool contains_any(const std::vector<std::string>& vocabulary,
                  const std::array<std::string_view, N>& words) {
    return std::any_of(words.begin(), words.end(),
                       [&](std::string_view w) { return contains_word(vocabulary, w); });
}

std::int64_t alphabet_position(char c) { return lower(c) - 'a' + 1; }

} // namespace

std::string_view to_string(ArithmeticOp op) {
    return op == ArithmeticOp::sum ? "sum" : "product";
}

std::vector<NumericQuantity> quantities_for(Dimension dimension) {
    std::vector<NumericQuantity> q{NumericQuantity::word_position};
    if (dimension.value() >= 2) {
        q.push_back(NumericQuantity::char_position);
    }
    if (dimension.value() >= 3) {
        q.push_back(NumericQuantity::alphabet_position);
    }
    return q;
}

const NumericConfig& default_numeric_config() {
    static const NumericConfig config = build_default_config();
    return config;
}

std::uint64_t template_id(const std::vector<SentenceSlot>& slots, const TemplateChoice& choice) {
    if (choice.variants.size() != slots.size()) {
        throw ContractError("template choice does not match slot count");
    }
    std::uint64_t id = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        id = id * slots[i].size() + choice.variants[i];
    }
    return id;
}

std::string assemble_paragraph(const std::vector<SentenceSlot>& slots,
                               const TemplateChoice& choice) {
    if (choice.variants.size() != slots.size()) {
        throw ContractError("template choice does not match slot count");
    }
    std::vector<std::string_view> words;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const auto& text = slots[i].at(choice.variants[i]).text;
        const auto w = split_words(text);
        words.insert(words.end(), w.begin(), w.end());
    }
    return wrap(words);
}

std::vector<std::string> paragraph_vocabulary(std::string_view paragraph) {
    return vocabulary_of(split_words(paragraph));
}

std::vector<Substitution> maskable_positions(std::string_view paragraph) {
    const auto tokens = split_words(paragraph);
    const auto counts = completion_counts(vocabulary_of(tokens));
    std::vector<Substitution> out;
    for (std::size_t w = 0; w < tokens.size(); ++w) {
        std::string key = bare_word(tokens[w]);
        for (std::size_t c = 0; c < key.size(); ++c) {
            if (!is_letter(key[c])) {
                continue;
            }
            const char original = key[c];
            key[c] = kMaskChar;
            if (counts.at(key) == 1) {
                out.push_back({static_cast<int>(w + 1), static_cast<int>(c + 1), original,
                               kMaskChar});
            }
            key[c] = original;
        }
    }
    return out;
}

NumericAnswer solve_numeric(const NumericSpec& spec) {
    if (spec.substitutions.size() != 1) {
        throw ContractError("numeric spec must carry exactly one substitution");
    }
    const auto& s = spec.substitutions.front();
    std::vector<std::int64_t> terms{s.word_index};
    if (spec.dimension.value() >= 2) {
        terms.push_back(s.char_index);
    }
    if (spec.dimension.value() >= 3) {
        terms.push_back(alphabet_position(s.original_char));
    }
    std::int64_t value = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        value = spec.op == ArithmeticOp::sum ? value + terms[i] : value * terms[i];
    }
    return {value};
}

NumericAnswer solve_from_prompt(std::string_view prompt) {
    const auto split = prompt.find("\n\n");
    const std::string_view paragraph = prompt.substr(0, split);
    const std::string_view rest =
        split == std::string_view::npos ? std::string_view{} : prompt.substr(split + 2);

    if (std::count(paragraph.begin(), paragraph.end(), kMaskChar) != 1) {
        throw FormatError("prompt paragraph must contain exactly one mask character");
    }
    auto tokens = split_words(paragraph);
    std::size_t word_pos = 0;
    std::size_t char_pos = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto at = tokens[i].find(kMaskChar);
        if (at != std::string_view::npos) {
            word_pos = i + 1;
            char_pos = at + 1;
        }
    }

    // Recover the hidden letter from the word list that follows the paragraph.
    const auto header = rest.find(kVocabularyHeader);
    if (header == std::string_view::npos) {
        throw FormatError("prompt has no word list");
    }
    std::string list(rest.substr(header + kVocabularyHeader.size()));
    std::replace(list.begin(), list.end(), ',', ' ');
    const auto masked = bare_word(tokens[word_pos - 1]);
    std::set<char> letters;
    for (auto candidate : split_words(list)) {
        if (candidate.size() != masked.size()) {
            continue;
        }
        bool fits = true;
        for (std::size_t i = 0; i < masked.size() && fits; ++i) {
            fits = i == char_pos - 1 ? is_letter(candidate[i]) : lower(candidate[i]) == masked[i];
        }
        if (fits) {
            letters.insert(lower(candidate[char_pos - 1]));
        }
    }
    if (letters.size() != 1) {
        throw FormatError(fmt::format("cannot recover the letter hidden in \"{}\"", masked));
    }
    const char letter = *letters.begin();

    // Read the instructions from the restored paragraph.
    std::string restored(paragraph);
    restored[restored.find(kMaskChar)] = letter;
    const auto vocabulary = paragraph_vocabulary(restored);
    const bool wants_char = contains_word(vocabulary, kCharPositionWord);
    const bool wants_alpha = contains_word(vocabulary, kAlphabetWord);

    std::vector<std::int64_t> terms{static_cast<std::int64_t>(word_pos)};
    if (wants_char) {
        terms.push_back(static_cast<std::int64_t>(char_pos));
    }
    if (wants_alpha) {
        terms.push_back(alphabet_position(letter));
    }
    if (terms.size() == 1) {
        return {terms.front()};
    }
    const bool adds = contains_any(vocabulary, kSumWords);
    const bool multiplies = contains_any(vocabulary, kProductWords);
    if (adds == multiplies) {
        throw FormatError("instructions must name exactly one operation");
    }
    std::int64_t value = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        value = adds ? value + terms[i] : value * terms[i];
    }
    return {value};
}

Puzzle generate_numeric(Dimension dimension, RngStream& rng) {
    return generate_numeric(dimension, rng, default_numeric_config());
}

Puzzle generate_numeric(Dimension dimension, RngStream& rng, const NumericConfig& config) {
    const auto& slots = config.slots_for(dimension);
    if (slots.empty()) {
        throw ContractError("numeric config has no slots for " + dimension.label());
    }

    TemplateChoice choice;
    std::optional<ArithmeticOp> op;
    for (const auto& slot : slots) {
        const auto v = rng.draw_index(slot.size());
        choice.variants.push_back(v);
        if (slot[v].op) {
            op = slot[v].op;
        }
    }
    if (dimension.value() >= 2 && !op) {
        throw ContractError("numeric config for " + dimension.label() + " names no operation");
    }

    const std::string paragraph = assemble_paragraph(slots, choice);
    const auto positions = maskable_positions(paragraph);
    if (positions.empty()) {
        throw GenerationError("template has no maskable letter");
    }
    const Substitution sub = positions[rng.draw_index(positions.size())];

    NumericSpec spec;
    spec.template_id = template_id(slots, choice);
    spec.substitutions = {sub};
    spec.op = op.value_or(ArithmeticOp::sum);
    spec.dimension = dimension;

    // Apply the mask to the wrapped paragraph.
    std::string masked = paragraph;
    {
        std::size_t word = 0;
        std::size_t i = 0;
        while (i < masked.size()) {
            while (i < masked.size() && std::isspace(static_cast<unsigned char>(masked[i]))) {
                ++i;
            }
            if (i == masked.size()) {
                break;
            }
            if (++word == static_cast<std::size_t>(sub.word_index)) {
                masked[i + static_cast<std::size_t>(sub.char_index) - 1] = sub.mask_char;
                break;
            }
            while (i < masked.size() && !std::isspace(static_cast<unsigned char>(masked[i]))) {
                ++i;
            }
        }
    }

    // The word list is the same for every mask position of this template.
    const auto vocabulary = paragraph_vocabulary(paragraph);
    std::vector<std::string> listed;
    for (std::size_t i = 0; i < vocabulary.size(); ++i) {
        listed.push_back(vocabulary[i] + (i + 1 < vocabulary.size() ? "," : ""));
    }
    auto list_words = split_words(kVocabularyHeader);
    list_words.insert(list_words.end(), listed.begin(), listed.end());

    Puzzle p;
    p.category = Category::numeric;
    p.dimension = dimension;
    p.prompt = masked + "\n\n" + wrap(list_words) + "\n";
    p.solution = std::to_string(solve_numeric(spec).value);

    std::string variants;
    for (std::size_t i = 0; i < choice.variants.size(); ++i) {
        variants += (i ? "." : "") + std::to_string(choice.variants[i]);
    }
    p.meta = {
        {"template_id", std::to_string(spec.template_id)},
        {"template_variants", variants},
        {"op", dimension.value() >= 2 ? std::string(to_string(spec.op)) : "none"},
        {"word_index", std::to_string(sub.word_index)},
        {"char_index", std::to_string(sub.char_index)},
        {"original_char", std::string(1, sub.original_char)},
        {"mask_char", std::string(1, sub.mask_char)},
    };
    return p;
}

std::vector<ParameterAxis> numeric_parameter_axes(Dimension dimension,
                                                  const NumericConfig& config) {
    const auto& slots = config.slots_for(dimension);
    BigCount templates = slots.empty() ? 0 : 1;
    for (const auto& slot : slots) {
        templates *= slot.size();
    }

    // Maskable letters depend on the whole paragraph's vocabulary, so walk every
    // template instance. Words and masked keys are interned once up front.
    BigCount masks = 0;
    if (!slots.empty() && templates > 0) {
        std::unordered_map<std::string, int> word_ids;
        std::unordered_map<std::string, int> key_ids;
        std::vector<std::vector<int>> word_keys;
        auto intern_word = [&](const std::string& word) {
            const auto [it, fresh] = word_ids.try_emplace(word, static_cast<int>(word_keys.size()));
            if (fresh) {
                std::vector<int> keys;
                std::string key = word;
                for (std::size_t c = 0; c < word.size(); ++c) {
                    if (!is_letter(word[c])) {
                        continue;
                    }
                    key[c] = kMaskChar;
                    keys.push_back(
                        key_ids.try_emplace(key, static_cast<int>(key_ids.size())).first->second);
                    key[c] = word[c];
                }
                word_keys.push_back(std::move(keys));
            }
            return it->second;
        };
        // Per slot variant: the interned word of every token, in order.
        std::vector<std::vector<std::vector<int>>> tokens(slots.size());
        for (std::size_t i = 0; i < slots.size(); ++i) {
            for (const auto& sentence : slots[i]) {
                std::vector<int> ids;
                for (auto t : split_words(sentence.text)) {
                    const auto w = bare_word(t);
                    if (!w.empty()) {
                        ids.push_back(intern_word(w));
                    }
                }
                tokens[i].push_back(std::move(ids));
            }
        }

        std::vector<int> key_count(key_ids.size(), 0);
        std::vector<char> seen(word_keys.size(), 0);
        std::vector<int> present;
        std::vector<std::size_t> variant(slots.size(), 0);
        for (;;) {
            present.clear();
            for (std::size_t i = 0; i < slots.size(); ++i) {
                for (int w : tokens[i][variant[i]]) {
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        present.push_back(w);
                    }
                }
            }
            for (int w : present) {
                for (int k : word_keys[static_cast<std::size_t>(w)]) {
                    ++key_count[static_cast<std::size_t>(k)];
                }
            }
            std::uint64_t here = 0;
            for (std::size_t i = 0; i < slots.size(); ++i) {
                for (int w : tokens[i][variant[i]]) {
                    for (int k : word_keys[static_cast<std::size_t>(w)]) {
                        here += key_count[static_cast<std::size_t>(k)] == 1;
                    }
                }
            }
            masks += here;
            for (int w : present) {
                seen[static_cast<std::size_t>(w)] = 0;
                for (int k : word_keys[static_cast<std::size_t>(w)]) {
                    key_count[static_cast<std::size_t>(k)] = 0;
                }
            }

            std::size_t i = slots.size();
            bool done = false;
            while (i > 0) {
                --i;
                if (++variant[i] < slots[i].size()) {
                    break;
                }
                variant[i] = 0;
                done = i == 0;
            }
            if (done) {
                break;
            }
        }
    }
    return {{"template and mask position", masks}};
}

} // namespace enigme
