#pragma once

#include <vector>

#include "alcove/bigint.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

// Coordinates a_1..a_r of a label, indexed against params.parts (ascending
// part order).  All entries are non-negative.
using WeightLabel = std::vector<long long>;

// Every label with sum_i a_i * parts_i <= alcove_bound(params, ell), in
// lexicographic order.  The zero label is always first.
std::vector<WeightLabel> enumerate_alcove(const AlcoveParams& params, long long ell);

// Cardinality of enumerate_alcove(params, ell), computed by a direct dynamic
// program on the inequality instead of materializing labels.
BigInt count_alcove(const AlcoveParams& params, long long ell);

}  // namespace alcove
