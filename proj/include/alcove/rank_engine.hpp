#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alcove/bigint.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

enum class Method { GeneratingFunction, Enumeration, Both };

std::string method_name(Method m);  // "gf" / "enum" / "both"
std::optional<Method> parse_method(std::string_view text);

struct RankQuery {
  LieType type;
  long long ell = 0;
  Method method = Method::Both;
};

struct SubcategoryRank {
  BigInt rank;
  std::string reason;  // which subcategory relation produced the value
};

struct RankResult {
  BigInt rank;
  AlcoveParams params;  // the row used: ell_m, parts, ell0, rho_pairing
  long long bound = 0;  // s = ell - rho_pairing - 1
  std::optional<bool> methods_agreed;  // set only when both methods ran
  std::optional<SubcategoryRank> subcategory;
};

// Rank of the category for (type, ell).  The divisibility class ell_m is
// derived from ell, never supplied.  With Method::Both the two routes must
// agree; disagreement throws MethodDisagreement rather than picking a value.
RankResult rank(const RankQuery& q);

// Subcategory ranks per the known corollaries.  A_r with gcd(ell, r+1) = 1
// has a modular subcategory of rank 1/(r+1) of the full rank; B_r at odd ell
// one of exactly half the full rank.  Empty when the hypothesis fails;
// IndivisibleRank if the stated division is not exact (a bug signal).
std::optional<BigInt> subcategory_rank_A(const RankQuery& q);
std::optional<BigInt> subcategory_rank_B(const RankQuery& q);

struct RankTableEntry {
  long long ell = 0;
  bool degenerate = false;             // level below ell0 for its class
  AlcoveParams params;                 // row for the level's divisibility class
  std::optional<RankResult> result;    // present iff not degenerate
};

// One entry per ell in [ell_min, ell_max], in order; degenerate levels are
// marked rather than skipped.
std::vector<RankTableEntry> rank_table(LieType t, long long ell_min, long long ell_max,
                                       Method method = Method::Both);

}  // namespace alcove
