#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace enigme {

enum class Category : std::uint8_t { numeric, sequence, physics };

inline constexpr std::array<Category, 3> all_categories{Category::numeric, Category::sequence,
                                                        Category::physics};

std::string_view to_string(Category category);
std::optional<Category> parse_category(std::string_view text);

/// Puzzle complexity, 1 to 3. For numeric puzzles it is the number of quantities
/// combined; for sequence and physics puzzles it is the number of spatial axes.
class Dimension {
public:
    /// Throws ContractError outside {1, 2, 3}.
    explicit Dimension(int value);

    [[nodiscard]] int value() const noexcept { return value_; }

    /// Accepts "1d", "2d", "3d" (and the bare digits).
    static std::optional<Dimension> parse(std::string_view text);
    /// "1d", "2d" or "3d".
    [[nodiscard]] std::string label() const;

    friend bool operator==(Dimension, Dimension) = default;
    friend auto operator<=>(Dimension, Dimension) = default;

private:
    int value_;
};

inline const std::array<Dimension, 3> all_dimensions{Dimension{1}, Dimension{2}, Dimension{3}};

} // namespace enigme
