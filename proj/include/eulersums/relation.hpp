#pragma once

#include <optional>
#include <vector>

#include "eulersums/high_float.hpp"
#include "eulersums/rational.hpp"

namespace eulersums {

struct RelationOptions {
    /// Working precision in bits; 0 uses the smallest precision among the inputs.
    long bits = 0;
    /// Relations with a coefficient of magnitude >= max_coeff are not reported.
    Integer max_coeff = Integer(1) << 256;
    int max_steps = 100000;
};

/// PSLQ: integers c, not all zero, with |sum c_i x_i| below 2^(-3/4 bits). Returns nullopt when
/// no relation is found within the limits. Throws Error for fewer than two inputs, or a zero input.
std::optional<std::vector<Integer>> find_integer_relation(const std::vector<HighFloat>& x,
                                                          const RelationOptions& opts = {});

} // namespace eulersums
