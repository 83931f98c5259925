#include "enigme/variations.hpp"

#include "enigme/numeric.hpp"
#include "enigme/physics.hpp"
#include "enigme/sequence.hpp"

#include <fmt/format.h>

namespace enigme {

namespace {

VariationEstimate from_axes(Category category, Dimension dimension,
                            std::vector<ParameterAxis> axes) {
    BigCount product = 1;
    for (const auto& axis : axes) {
        product *= axis.choices;
    }
    return {category, dimension, product, std::move(axes)};
}

} // namespace

VariationEstimate estimate_variations(Dimension dimension, const NumericConfig& config) {
    return from_axes(Category::numeric, dimension, numeric_parameter_axes(dimension, config));
}

VariationEstimate estimate_variations(Dimension dimension, const SequenceConfig& config) {
    return from_axes(Category::sequence, dimension, sequence_parameter_axes(dimension, config));
}

VariationEstimate estimate_variations(Dimension dimension, const PhysicsConfig& config) {
    return from_axes(Category::physics, dimension, physics_parameter_axes(dimension, config));
}

VariationEstimate estimate_variations(Category category, Dimension dimension) {
    switch (category) {
    case Category::numeric: return estimate_variations(dimension, default_numeric_config());
    case Category::sequence: return estimate_variations(dimension, default_sequence_config());
    case Category::physics: return estimate_variations(dimension, default_physics_config());
    }
    return {category, dimension, 0, {}};
}

std::string scientific(const BigCount& value) {
    const std::string digits = value.str();
    if (digits.size() < 2 || value < 0) {
        return digits;
    }
    return fmt::format("{}.{}e{}", digits[0], digits[1], digits.size() - 1);
}

BigCount permutations(unsigned n, unsigned k) {
    BigCount out = 1;
    for (unsigned i = 0; i < k; ++i) {
        out *= (i < n ? n - i : 0);
    }
    return out;
}

} // namespace enigme
