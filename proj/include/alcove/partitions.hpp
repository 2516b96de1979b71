#pragma once

#include <vector>

#include "alcove/bigint.hpp"

namespace alcove {

// Number of ways to write n = sum_t x_t * t with x_t >= 0, where repeated
// entries of `parts` count as distinct part types.  Order of `parts` is
// irrelevant.  Requires a non-empty multiset of positive parts and n >= 0.
BigInt count_partitions(const std::vector<long long>& parts, long long n);

// Sum of count_partitions(parts, k) over 0 <= k <= s.
BigInt count_partitions_upto(const std::vector<long long>& parts, long long s);

}  // namespace alcove
