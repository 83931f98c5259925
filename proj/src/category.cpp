#include "enigme/category.hpp"

#include "enigme/errors.hpp"

namespace enigme {

std::string_view to_string(Category category) {
    switch (category) {
    case Category::numeric: return "numeric";
    case Category::sequence: return "sequence";
    case Category::physics: return "physics";
    }
    return "unknown";
}

std::optional<Category> parse_category(std::string_view text) {
    for (Category c : all_categories) {
        if (to_string(c) == text) {
            return c;
        }
    }
    return std::nullopt;
}

Dimension::Dimension(int value) : value_(value) {
    if (value < 1 || value > 3) {
        throw ContractError("dimension must be 1, 2 or 3, got " + std::to_string(value));
    }
}

std::optional<Dimension> Dimension::parse(std::string_view text) {
    if (text.size() == 2 && text[1] == 'd') {
        text.remove_suffix(1);
    }
    if (text.size() != 1 || text[0] < '1' || text[0] > '3') {
        return std::nullopt;
    }
    return Dimension{text[0] - '0'};
}

std::string Dimension::label() const { return std::to_string(value_) + "d"; }

} // namespace enigme
