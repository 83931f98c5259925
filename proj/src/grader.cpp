#include "enigme/grader.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <vector>

namespace enigme {

namespace {

bool blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
}

std::string normalize(std::string_view text) {
    std::vector<std::string> lines(1);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            continue;
        }
        if (text[i] == '\n') {
            lines.emplace_back();
        } else {
            lines.back() += text[i];
        }
    }
    for (auto& line : lines) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
            line.pop_back();
        }
    }
    auto first = std::find_if_not(lines.begin(), lines.end(), [](auto& l) { return blank(l); });
    auto last = std::find_if_not(lines.rbegin(), lines.rend(), [](auto& l) { return blank(l); });
    std::string out;
    if (first == lines.end()) {
        return out;
    }
    for (auto it = first; it != last.base(); ++it) {
        if (it != first) {
            out += '\n';
        }
        out += *it;
    }
    return out;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
}

std::string_view strip_zeros(std::string_view digits) {
    while (digits.size() > 1 && digits.front() == '0') {
        digits.remove_prefix(1);
    }
    return digits;
}

std::string show(char c) {
    if (c == '\n') {
        return "'\\n'";
    }
    if (c == '\r') {
        return "'\\r'";
    }
    if (std::isprint(static_cast<unsigned char>(c)) != 0) {
        return fmt::format("'{}'", c);
    }
    return fmt::format("0x{:02x}", static_cast<unsigned char>(c));
}

std::string first_mismatch(std::string_view expected, std::string_view actual) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t n = std::min(expected.size(), actual.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (expected[i] != actual[i]) {
            return fmt::format("line {}, column {}: expected {}, got {}", line, column,
                               show(expected[i]), show(actual[i]));
        }
        if (expected[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    if (expected.size() > actual.size()) {
        return fmt::format("line {}, column {}: candidate ends early", line, column);
    }
    return fmt::format("line {}, column {}: candidate has extra text", line, column);
}

} // namespace

std::string_view to_string(GradeMode mode) {
    return mode == GradeMode::exact ? "exact" : "normalized";
}

std::optional<GradeMode> parse_grade_mode(std::string_view text) {
    if (text == "exact") {
        return GradeMode::exact;
    }
    if (text == "normalized") {
        return GradeMode::normalized;
    }
    return std::nullopt;
}

GradeResult grade(std::string_view solution, std::string_view candidate, GradeMode mode) {
    GradeResult result;
    result.mode = mode;

    if (mode == GradeMode::exact) {
        if (solution == candidate) {
            result.score = 1;
        } else {
            result.detail = first_mismatch(solution, candidate);
        }
        return result;
    }

    const std::string want = normalize(solution);
    const std::string got = normalize(candidate);

    if (all_digits(want)) {
        // Numeric answers: the candidate's single run of digits is the answer.
        std::vector<std::string_view> runs;
        std::size_t i = 0;
        while (i < got.size()) {
            if (!std::isdigit(static_cast<unsigned char>(got[i]))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < got.size() && std::isdigit(static_cast<unsigned char>(got[i]))) {
                ++i;
            }
            runs.push_back(std::string_view(got).substr(start, i - start));
        }
        if (runs.size() != 1) {
            result.detail = fmt::format("expected one number in the candidate, found {}", runs.size());
        } else if (strip_zeros(runs.front()) != strip_zeros(want)) {
            result.detail = fmt::format("expected {}, got {}", strip_zeros(want), runs.front());
        } else {
            result.score = 1;
        }
        return result;
    }

    if (want == got) {
        result.score = 1;
    } else {
        result.detail = first_mismatch(want, got);
    }
    return result;
}

} // namespace enigme
