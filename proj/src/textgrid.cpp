#include "enigme/textgrid.hpp"

#include "enigme/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <span>
#include <vector>

namespace enigme {

namespace {

bool printable(char c) noexcept { return c >= 0x20 && c <= 0x7e; }

constexpr std::string_view kSliceHeader = "slice ";

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    return lines;
}

// Rows of one 2-D slice; all rows must share a width.
void check_rows(std::span<const std::string_view> rows, int& width, std::size_t first_line) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto row = rows[i];
        if (row.empty()) {
            throw FormatError(fmt::format("line {}: empty row", first_line + i + 1));
        }
        for (std::size_t col = 0; col < row.size(); ++col) {
            if (!printable(row[col])) {
                throw FormatError(fmt::format("line {}, column {}: non-printable character 0x{:02x}",
                                              first_line + i + 1, col + 1,
                                              static_cast<unsigned char>(row[col])));
            }
        }
        if (width == 0) {
            width = static_cast<int>(row.size());
        } else if (static_cast<int>(row.size()) != width) {
            throw FormatError(fmt::format("line {}: ragged row of width {}, expected {}",
                                          first_line + i + 1, row.size(), width));
        }
    }
}

} // namespace

bool CharPalette::is_background(char c) const noexcept {
    return background_set.find(c) != std::string_view::npos;
}

bool CharPalette::is_foreground(char c) const noexcept {
    return foreground_set.find(c) != std::string_view::npos;
}

Grid::Grid(Extents extents, char background)
    : Grid(extents, background,
           std::string(extents.width > 0 && extents.height > 0 && extents.depth > 0
                           ? extents.cell_count()
                           : 0,
                       background)) {}

Grid::Grid(Extents extents, char background, std::string cells)
    : extents_(extents), background_(background), cells_(std::move(cells)) {
    if (extents.width < 1 || extents.height < 1 || extents.depth < 1) {
        throw ContractError("grid extents must be positive");
    }
    if (!kPalette.is_background(background)) {
        throw ContractError(fmt::format("'{}' is not a background character", background));
    }
    if (cells_.size() != extents.cell_count()) {
        throw ContractError(fmt::format("grid needs {} cells, got {}", extents.cell_count(),
                                        cells_.size()));
    }
    if (!std::all_of(cells_.begin(), cells_.end(), printable)) {
        throw ContractError("grid cells must be printable ASCII");
    }
}

Coord Grid::coord(std::size_t index) const noexcept {
    const auto w = static_cast<std::size_t>(extents_.width);
    const auto h = static_cast<std::size_t>(extents_.height);
    return {static_cast<int>(index % w), static_cast<int>((index / w) % h),
            static_cast<int>(index / (w * h))};
}

bool Grid::contains(Coord c) const noexcept {
    return c[0] >= 0 && c[0] < extents_.width && c[1] >= 0 && c[1] < extents_.height &&
           c[2] >= 0 && c[2] < extents_.depth;
}

void Grid::set(Coord c, char value) {
    if (!contains(c)) {
        throw ContractError(fmt::format("cell ({}, {}, {}) outside grid", c[0], c[1], c[2]));
    }
    if (!printable(value)) {
        throw ContractError("grid cells must be printable ASCII");
    }
    cells_[index(c)] = value;
}

std::size_t Grid::foreground_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), [&](char c) { return c != background_; }));
}

std::string render(const Grid& grid) {
    const auto& e = grid.extents();
    const auto w = static_cast<std::size_t>(e.width);
    std::string out;
    out.reserve(grid.cells().size() + static_cast<std::size_t>(e.height * e.depth) +
                static_cast<std::size_t>(e.depth) * 10);
    for (int z = 0; z < e.depth; ++z) {
        if (e.depth > 1) {
            if (z > 0) {
                out += '\n';
            }
            out += fmt::format("{}{}\n", kSliceHeader, z);
        }
        for (int y = 0; y < e.height; ++y) {
            out.append(grid.cells(), grid.index({0, y, z}), w);
            out += '\n';
        }
    }
    return out;
}

Grid parse(std::string_view text, char background) {
    const auto lines = split_lines(text);
    if (lines.empty()) {
        throw FormatError("empty grid text");
    }

    int width = 0;
    std::string cells;

    if (!lines.front().starts_with(kSliceHeader)) {
        check_rows(lines, width, 0);
        for (auto row : lines) {
            cells.append(row);
        }
        return Grid({width, static_cast<int>(lines.size()), 1}, background, std::move(cells));
    }

    // Slices: "slice k", rows, then a blank line before the next header.
    int height = 0;
    int depth = 0;
    std::size_t i = 0;
    while (i < lines.size()) {
        if (depth > 0) {
            if (!lines[i].empty()) {
                throw FormatError(fmt::format("line {}: expected blank line between slices", i + 1));
            }
            ++i;
            if (i == lines.size()) {
                throw FormatError("trailing blank line after last slice");
            }
        }
        const auto expected = fmt::format("{}{}", kSliceHeader, depth);
        if (lines[i] != expected) {
            throw FormatError(fmt::format("line {}: expected \"{}\"", i + 1, expected));
        }
        ++i;
        const std::size_t first = i;
        while (i < lines.size() && !lines[i].empty()) {
            ++i;
        }
        const auto rows = std::span(lines).subspan(first, i - first);
        if (rows.empty()) {
            throw FormatError(fmt::format("slice {} has no rows", depth));
        }
        if (height == 0) {
            height = static_cast<int>(rows.size());
        } else if (static_cast<int>(rows.size()) != height) {
            throw FormatError(fmt::format("slice {} has {} rows, expected {}", depth, rows.size(),
                                          height));
        }
        check_rows(rows, width, first);
        for (auto row : rows) {
            cells.append(row);
        }
        ++depth;
    }
    return Grid({width, height, depth}, background, std::move(cells));
}

} // namespace enigme
