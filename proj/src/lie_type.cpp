#include "alcove/lie_type.hpp"

#include <cctype>
#include <ostream>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

bool valid_combination(Series s, int rank) {
  switch (s) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 4;
    case Series::E: return rank == 6 || rank == 7 || rank == 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

}  // namespace

LieType::LieType(Series series, int rank) : series_(series), rank_(rank) {
  if (!valid_combination(series, rank)) {
    throw InvalidLieType("invalid Lie type " + std::string(1, static_cast<char>(series)) +
                         std::to_string(rank) +
                         " (accepted: A>=1, B>=2, C>=2, D>=4, E6..E8, F4, G2)");
  }
}

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) {
    throw InvalidLieType("cannot parse Lie type '" + std::string(text) + "'");
  }
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') {
    throw InvalidLieType("unknown series letter in '" + std::string(text) + "'");
  }
  int rank = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidLieType("malformed rank in '" + std::string(text) + "'");
    }
    rank = rank * 10 + (text[i] - '0');
    if (rank > 1000000) {
      throw InvalidLieType("rank out of range in '" + std::string(text) + "'");
    }
  }
  return LieType(static_cast<Series>(letter), rank);
}

std::string LieType::name() const {
  return std::string(1, static_cast<char>(series_)) + std::to_string(rank_);
}

std::ostream& operator<<(std::ostream& os, const LieType& t) { return os << t.name(); }

std::vector<LieType> all_types_up_to_rank(int max_rank) {
  std::vector<LieType> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back(Series::A, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Series::B, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Series::C, r);
  for (int r = 4; r <= max_rank; ++r) out.emplace_back(Series::D, r);
  for (int r = 6; r <= max_rank && r <= 8; ++r) out.emplace_back(Series::E, r);
  if (max_rank >= 4) out.emplace_back(Series::F, 4);
  if (max_rank >= 2) out.emplace_back(Series::G, 2);
  return out;
}

}  // namespace alcove
