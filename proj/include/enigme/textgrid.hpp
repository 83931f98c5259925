#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace enigme {

/// Filler characters a grid may use as its background.
inline constexpr std::string_view kBackgroundChars = ".,_'`";

/// 26 uppercase letters, 10 digits and two punctuation marks: 38 glyphs.
inline constexpr std::string_view kForegroundChars = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789#@";

struct CharPalette {
    std::string_view background_set = kBackgroundChars;
    std::string_view foreground_set = kForegroundChars;

    [[nodiscard]] bool is_background(char c) const noexcept;
    [[nodiscard]] bool is_foreground(char c) const noexcept;
};

inline constexpr CharPalette kPalette{};

struct Extents {
    int width = 1;
    int height = 1;
    int depth = 1;

    [[nodiscard]] std::size_t cell_count() const noexcept {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height) *
               static_cast<std::size_t>(depth);
    }
    [[nodiscard]] int along(int axis) const noexcept {
        return axis == 0 ? width : axis == 1 ? height : depth;
    }

    friend bool operator==(const Extents&, const Extents&) = default;
};

using Coord = std::array<int, 3>;

/// Dense character grid, row-major with the origin at the top left, y growing
/// downward and z selecting the slice. Unused axes have extent 1.
class Grid {
public:
    /// Grid filled with `background`. Throws ContractError for non-positive
    /// extents or a background outside kBackgroundChars.
    Grid(Extents extents, char background);

    /// Grid from explicit cells. Throws ContractError when the cell count does
    /// not match or a cell is not printable ASCII.
    Grid(Extents extents, char background, std::string cells);

    [[nodiscard]] const Extents& extents() const noexcept { return extents_; }
    [[nodiscard]] char background() const noexcept { return background_; }
    [[nodiscard]] const std::string& cells() const noexcept { return cells_; }

    [[nodiscard]] std::size_t index(Coord c) const noexcept {
        return static_cast<std::size_t>(c[0]) +
               static_cast<std::size_t>(extents_.width) *
                   (static_cast<std::size_t>(c[1]) +
                    static_cast<std::size_t>(extents_.height) * static_cast<std::size_t>(c[2]));
    }
    [[nodiscard]] Coord coord(std::size_t index) const noexcept;
    [[nodiscard]] bool contains(Coord c) const noexcept;

    [[nodiscard]] char at(Coord c) const { return cells_.at(index(c)); }
    void set(Coord c, char value);

    [[nodiscard]] bool is_background_at(std::size_t i) const noexcept {
        return cells_[i] == background_;
    }
    [[nodiscard]] std::size_t foreground_count() const noexcept;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    Extents extents_;
    char background_;
    std::string cells_;
};

/// Canonical text form. 1-D and 2-D grids print one line per row. Grids with
/// depth > 1 print each z-slice under a "slice k" header, slices separated by a
/// blank line. Every line ends with '\n'.
std::string render(const Grid& grid);

/// Inverse of render. Throws FormatError on ragged rows, non-printable
/// characters, bad slice headers or slices of differing size.
Grid parse(std::string_view text, char background);

} // namespace enigme
