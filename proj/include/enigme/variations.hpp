#pragma once

#include "enigme/category.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace enigme {

using BigCount = boost::multiprecision::cpp_int;

/// One independent free parameter of a generator and its number of choices.
/// Parameters whose ranges depend on each other are folded into a single axis
/// whose count is the exact size of their joint range.
struct ParameterAxis {
    std::string name;
    BigCount choices;
};

struct VariationEstimate {
    Category category;
    Dimension dimension;
    BigCount cardinality;
    std::vector<ParameterAxis> axes;
};

struct NumericConfig;
struct SequenceConfig;
struct PhysicsConfig;

/// Product of the generator's parameter axes for its default configuration.
VariationEstimate estimate_variations(Category category, Dimension dimension);

VariationEstimate estimate_variations(Dimension dimension, const NumericConfig& config);
VariationEstimate estimate_variations(Dimension dimension, const SequenceConfig& config);
VariationEstimate estimate_variations(Dimension dimension, const PhysicsConfig& config);

/// Scientific shorthand such as "3.0e5" (two significant digits, truncated).
std::string scientific(const BigCount& value);

/// Falling factorial n * (n-1) * ... * (n-k+1).
BigCount permutations(unsigned n, unsigned k);

} // namespace enigme
