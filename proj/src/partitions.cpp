#include "alcove/partitions.hpp"

#include <stdexcept>

namespace alcove {

namespace {

void check_parts(const std::vector<long long>& parts) {
  if (parts.empty()) throw std::invalid_argument("part multiset must be non-empty");
  for (long long t : parts) {
    if (t < 1) throw std::invalid_argument("parts must be positive integers");
  }
}

// Coin-counting table: ways[n] = number of representations of n after folding
// in each part type in turn.  Repeated parts are folded repeatedly, so they
// act as distinct coin types.
std::vector<BigInt> partition_table(const std::vector<long long>& parts, long long limit) {
  std::vector<BigInt> ways(static_cast<size_t>(limit) + 1);
  ways[0] = 1;
  for (long long t : parts) {
    for (long long n = t; n <= limit; ++n) {
      ways[static_cast<size_t>(n)] += ways[static_cast<size_t>(n - t)];
    }
  }
  return ways;
}

}  // namespace

BigInt count_partitions(const std::vector<long long>& parts, long long n) {
  check_parts(parts);
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  return partition_table(parts, n)[static_cast<size_t>(n)];
}

BigInt count_partitions_upto(const std::vector<long long>& parts, long long s) {
  check_parts(parts);
  if (s < 0) throw std::invalid_argument("s must be non-negative");
  std::vector<BigInt> ways = partition_table(parts, s);
  BigInt total = 0;
  for (const BigInt& w : ways) total += w;
  return total;
}

}  // namespace alcove
