#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcove/bigint.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

// Integer polynomial stored as exponent -> coefficient.  Zero coefficients
// are never stored, so equality is structural.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;

  static SparsePolynomial constant(const BigInt& c);
  static SparsePolynomial one_minus_power(long long k);  // 1 - x^k, k >= 1

  // Coefficient of x^exponent; zero when the term is absent.
  const BigInt& coeff(long long exponent) const;
  void add_term(long long exponent, const BigInt& c);

  bool is_zero() const { return terms_.empty(); }
  long long degree() const;  // -1 for the zero polynomial
  const std::map<long long, BigInt>& terms() const { return terms_; }

  SparsePolynomial operator*(const SparsePolynomial& rhs) const;
  bool operator==(const SparsePolynomial&) const = default;

  std::string to_string() const;  // "1 - x^2 + 3x^5"

 private:
  std::map<long long, BigInt> terms_;
};

// Numerator/denominator pair read as a formal power series.  A unit constant
// term in the denominator makes the expansion unique with integer
// coefficients.
struct RationalSeries {
  SparsePolynomial numerator;
  SparsePolynomial denominator;
};

// F(x) = 1 / ((1-x) * prod_{k in parts} (1-x^k)): the coefficient of x^s
// counts the labels with alcove bound s.
RationalSeries rank_series(const AlcoveParams& params);

// Coefficients 0..order of the power-series expansion, computed exactly by
// the linear recurrence the denominator induces (series long division).
// Throws NonUnitDenominator unless the denominator's constant term is +-1.
std::vector<BigInt> expand(const RationalSeries& series, long long order);

// Coefficient of x^s, s = alcove_bound(params, ell), of rank_series(params).
BigInt rank_coefficient(const AlcoveParams& params, long long ell);

}  // namespace alcove
