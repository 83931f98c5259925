#pragma once

#include <stdexcept>
#include <string>

namespace enigme {

/// A caller broke an operation's precondition (bad range, mismatched extents).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Text handed to a parser does not follow the expected layout.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generator exhausted its redraw budget without producing a valid puzzle.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace enigme
