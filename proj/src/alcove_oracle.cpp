#include "alcove/alcove_oracle.hpp"

namespace alcove {

namespace {

void enumerate_rec(const std::vector<long long>& parts, size_t i, long long budget,
                   WeightLabel& current, std::vector<WeightLabel>& out) {
  if (i == parts.size()) {
    out.push_back(current);
    return;
  }
  for (long long a = 0; a * parts[i] <= budget; ++a) {
    current[i] = a;
    enumerate_rec(parts, i + 1, budget - a * parts[i], current, out);
  }
  current[i] = 0;
}

}  // namespace

std::vector<WeightLabel> enumerate_alcove(const AlcoveParams& params, long long ell) {
  const long long s = alcove_bound(params, ell);
  std::vector<WeightLabel> out;
  WeightLabel current(params.parts.size(), 0);
  enumerate_rec(params.parts, 0, s, current, out);
  return out;
}

BigInt count_alcove(const AlcoveParams& params, long long ell) {
  const long long s = alcove_bound(params, ell);
  // Solutions of sum_{k >= i} a_k p_k <= b satisfy
  //   count(i, b) = count(i+1, b) + count(i, b - p_i)
  // (split on a_i = 0 vs a_i >= 1).  Rolling the table over i, starting from
  // the all-ones row for the empty suffix:
  std::vector<BigInt> count(static_cast<size_t>(s) + 1, BigInt(1));
  for (size_t i = params.parts.size(); i-- > 0;) {
    const long long p = params.parts[i];
    for (long long b = p; b <= s; ++b) {
      count[static_cast<size_t>(b)] += count[static_cast<size_t>(b - p)];
    }
  }
  return count[static_cast<size_t>(s)];
}

}  // namespace alcove
