#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

// Base class for every error the library raises on bad domain input.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Series/rank combination outside the accepted ranges (A_r r>=1, B_r r>=2,
// C_r r>=2, D_r r>=4, E_6..E_8, F_4, G_2).
class InvalidLieType : public Error {
  using Error::Error;
};

// ell_m = 1 requested for a simply-laced type; m = 1 divides every level.
class InvalidParity : public Error {
  using Error::Error;
};

// Level too small for the type and divisibility class: the alcove is empty.
class DegenerateLevel : public Error {
 public:
  DegenerateLevel(const std::string& what, long long ell, long long ell0)
      : Error(what), ell(ell), ell0(ell0) {}

  long long ell;
  long long ell0;  // minimal non-degenerate level in the same class
};

// Divisibility of the level by the lacing number does not match ell_m.
class ParityMismatch : public Error {
  using Error::Error;
};

// Power-series expansion needs a unit constant term in the denominator.
class NonUnitDenominator : public Error {
  using Error::Error;
};

// The generating-function and enumeration routes disagreed.  This is never a
// property of the input; it signals an implementation bug.
class MethodDisagreement : public Error {
  using Error::Error;
};

// A subcategory rank relation failed to divide exactly; also a bug signal.
class IndivisibleRank : public Error {
  using Error::Error;
};

}  // namespace alcove
