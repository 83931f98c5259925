#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace enigme {

enum class GradeMode { exact, normalized };

std::string_view to_string(GradeMode mode);
std::optional<GradeMode> parse_grade_mode(std::string_view text);

struct GradeResult {
    int score = 0;
    GradeMode mode = GradeMode::exact;
    /// First mismatch, e.g. "line 2, column 4: expected 'X', got '.'".
    std::optional<std::string> detail;
};

/// Scores `candidate` against `solution`.
///
/// exact: byte-for-byte equality.
/// normalized: CRLF becomes LF, trailing whitespace is dropped from every line
/// and leading/trailing blank lines are removed on both sides. When the
/// normalized solution is a plain decimal integer, the candidate must contain
/// exactly one run of digits and that run must equal it as an integer.
GradeResult grade(std::string_view solution, std::string_view candidate, GradeMode mode);

} // namespace enigme
