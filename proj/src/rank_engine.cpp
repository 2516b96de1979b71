#include "alcove/rank_engine.hpp"

#include <numeric>

#include "alcove/alcove_oracle.hpp"
#include "alcove/errors.hpp"
#include "alcove/genfunc.hpp"

namespace alcove {

namespace {

int derive_ell_m(const RootSystem& rs, long long ell) {
  return ell % rs.lacing == 0 ? 0 : 1;
}

BigInt exact_quotient(const BigInt& value, long long divisor, const std::string& relation) {
  if (value % divisor != 0) {
    throw IndivisibleRank("subcategory relation '" + relation + "' does not divide rank " +
                          value.str() + " by " + std::to_string(divisor));
  }
  return value / divisor;
}

// Closing-remark relations, applied when their hypotheses hold.
std::optional<SubcategoryRank> subcategory_for(LieType t, long long ell, const BigInt& full_rank) {
  if (t.series() == Series::A) {
    const long long n = t.rank() + 1;
    if (std::gcd(ell, n) != 1) return std::nullopt;
    return SubcategoryRank{exact_quotient(full_rank, n, "integer-weight / (r+1)"),
                           "integer-weight modular subcategory: rank / " + std::to_string(n)};
  }
  if (t.series() == Series::B) {
    if (ell % 2 == 0) return std::nullopt;
    return SubcategoryRank{exact_quotient(full_rank, 2, "non-spin / 2"),
                           "non-spin modular subcategory: rank / 2"};
  }
  return std::nullopt;
}

RankResult rank_with_params(const AlcoveParams& params, long long ell, Method method) {
  RankResult result{.params = params};
  result.bound = alcove_bound(params, ell);
  switch (method) {
    case Method::GeneratingFunction:
      result.rank = rank_coefficient(params, ell);
      break;
    case Method::Enumeration:
      result.rank = count_alcove(params, ell);
      break;
    case Method::Both: {
      BigInt gf = rank_coefficient(params, ell);
      BigInt direct = count_alcove(params, ell);
      if (gf != direct) {
        throw MethodDisagreement("methods disagree for " + params.type.name() + " at level " +
                                 std::to_string(ell) + ": generating function " + gf.str() +
                                 ", enumeration " + direct.str());
      }
      result.rank = std::move(gf);
      result.methods_agreed = true;
      break;
    }
  }
  result.subcategory = subcategory_for(params.type, ell, result.rank);
  return result;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::GeneratingFunction: return "gf";
    case Method::Enumeration: return "enum";
    case Method::Both: return "both";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "gf") return Method::GeneratingFunction;
  if (text == "enum") return Method::Enumeration;
  if (text == "both") return Method::Both;
  return std::nullopt;
}

RankResult rank(const RankQuery& q) {
  const RootSystem rs = build_root_system(q.type);
  const AlcoveParams params = alcove_params(rs, derive_ell_m(rs, q.ell));
  return rank_with_params(params, q.ell, q.method);
}

std::optional<BigInt> subcategory_rank_A(const RankQuery& q) {
  if (q.type.series() != Series::A) {
    throw std::invalid_argument("subcategory_rank_A needs an A-series type, got " + q.type.name());
  }
  RankResult full = rank(q);
  if (!full.subcategory) return std::nullopt;
  return full.subcategory->rank;
}

std::optional<BigInt> subcategory_rank_B(const RankQuery& q) {
  if (q.type.series() != Series::B) {
    throw std::invalid_argument("subcategory_rank_B needs a B-series type, got " + q.type.name());
  }
  RankResult full = rank(q);
  if (!full.subcategory) return std::nullopt;
  return full.subcategory->rank;
}

std::vector<RankTableEntry> rank_table(LieType t, long long ell_min, long long ell_max,
                                       Method method) {
  if (ell_min < 1) ell_min = 1;
  const RootSystem rs = build_root_system(t);
  const AlcoveParams params_div = alcove_params(rs, 0);
  // For simply-laced types every level is in the divisible class.
  const AlcoveParams params_indiv = rs.lacing == 1 ? params_div : alcove_params(rs, 1);

  std::vector<RankTableEntry> out;
  for (long long ell = ell_min; ell <= ell_max; ++ell) {
    const AlcoveParams& params = ell % rs.lacing == 0 ? params_div : params_indiv;
    RankTableEntry entry{.ell = ell};
    if (ell <= params.rho_pairing) {
      entry.degenerate = true;
    } else {
      entry.result = rank_with_params(params, ell, method);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace alcove
