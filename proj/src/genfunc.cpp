#include "alcove/genfunc.hpp"

#include <sstream>
#include <stdexcept>

#include "alcove/errors.hpp"

namespace alcove {

SparsePolynomial SparsePolynomial::constant(const BigInt& c) {
  SparsePolynomial p;
  p.add_term(0, c);
  return p;
}

SparsePolynomial SparsePolynomial::one_minus_power(long long k) {
  if (k < 1) throw std::invalid_argument("exponent must be >= 1");
  SparsePolynomial p;
  p.add_term(0, 1);
  p.add_term(k, -1);
  return p;
}

const BigInt& SparsePolynomial::coeff(long long exponent) const {
  static const BigInt zero = 0;
  auto it = terms_.find(exponent);
  return it == terms_.end() ? zero : it->second;
}

void SparsePolynomial::add_term(long long exponent, const BigInt& c) {
  if (exponent < 0) throw std::invalid_argument("exponents must be non-negative");
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (it->second == 0) {
    terms_.erase(it);
  }
}

long long SparsePolynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& rhs) const {
  SparsePolynomial out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || e == 0) os << mag.str();
    if (e >= 1) {
      os << "x";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

RationalSeries rank_series(const AlcoveParams& params) {
  SparsePolynomial den = SparsePolynomial::one_minus_power(1);
  for (long long k : params.parts) {
    den = den * SparsePolynomial::one_minus_power(k);
  }
  return RationalSeries{SparsePolynomial::constant(1), std::move(den)};
}

std::vector<BigInt> expand(const RationalSeries& series, long long order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  const BigInt& d0 = series.denominator.coeff(0);
  if (d0 != 1 && d0 != -1) {
    throw NonUnitDenominator("denominator constant term " + d0.str() +
                             " is not a unit; the expansion is not an integer series");
  }
  // d_0 c_n = num_n - sum_{e >= 1} d_e c_{n-e}, the recurrence series long
  // division induces.  With d_0 = +-1 every step is exact.
  std::vector<BigInt> coeffs(static_cast<size_t>(order) + 1);
  for (long long n = 0; n <= order; ++n) {
    BigInt acc = series.numerator.coeff(n);
    for (const auto& [e, de] : series.denominator.terms()) {
      if (e == 0) continue;
      if (e > n) break;
      acc -= de * coeffs[static_cast<size_t>(n - e)];
    }
    coeffs[static_cast<size_t>(n)] = d0 == 1 ? acc : -acc;
  }
  return coeffs;
}

BigInt rank_coefficient(const AlcoveParams& params, long long ell) {
  const long long s = alcove_bound(params, ell);
  std::vector<BigInt> coeffs = expand(rank_series(params), s);
  return coeffs[static_cast<size_t>(s)];
}

}  // namespace alcove
