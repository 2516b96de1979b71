#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace alcove {

enum class Series : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

// A simple Lie type: series letter plus rank, validated on construction.
// Accepted ranges: A_r (r>=1), B_r (r>=2), C_r (r>=2), D_r (r>=4), E_6, E_7,
// E_8, F_4, G_2.  Low-rank coincidences (B_1 ~ A_1, C_1 ~ A_1, D_2, D_3 ~ A_3)
// are rejected rather than aliased.
class LieType {
 public:
  LieType(Series series, int rank);  // throws InvalidLieType

  // Parses "G2", "b5", "E8", ... (case-insensitive letter, decimal rank).
  static LieType parse(std::string_view text);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const;  // "G2"

  bool operator==(const LieType&) const = default;

 private:
  Series series_;
  int rank_;
};

std::ostream& operator<<(std::ostream& os, const LieType& t);

// Every valid type with rank <= max_rank, ordered by series then rank.
std::vector<LieType> all_types_up_to_rank(int max_rank);

}  // namespace alcove
