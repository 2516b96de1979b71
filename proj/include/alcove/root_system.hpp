#pragma once

#include <vector>

#include "alcove/lie_type.hpp"

namespace alcove {

// Coefficients of a root in the simple-root basis (Bourbaki numbering).
using RootCoeffs = std::vector<int>;

// Exact root-system data, all of it derived from the Cartan matrix.  The
// bilinear form is normalized so a short root has squared length 2; the
// symmetrizer entries d_i = (alpha_i, alpha_i)/2 are then 1 for short simple
// roots and m for long ones, and every pairing below is an integer.
struct RootSystem {
  LieType type;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j-coroot>
  std::vector<int> symmetrizer;          // d_i
  std::vector<RootCoeffs> positive_roots;  // sorted by height, then lexicographically
  RootCoeffs theta_long;   // highest root
  RootCoeffs theta_short;  // highest short root (equals theta_long when m = 1)
  int lacing = 1;          // m: 1 for A/D/E, 2 for B/C/F4, 3 for G2
  int coxeter = 0;         // h
  int dual_coxeter = 0;    // h-dual
};

// Generates the positive roots by closing the simple roots under root-string
// addition, then reads off the highest long/short roots and the Coxeter
// numbers.  Nothing is transcribed from tables.
RootSystem build_root_system(LieType t);

enum class ThetaKind { Long, Short };

struct ThetaPairing {
  std::vector<long long> weight_pairings;  // L_i = <lambda_i, theta>, simple-root index order
  long long rho_pairing = 0;               // <rho, theta>
};

// Pairings of the fundamental weights and of rho against the chosen theta.
// Writing theta = sum_k c_k alpha_k, these are L_i = c_i d_i and
// <rho, theta> = sum_k c_k d_k; everything stays in integers.
ThetaPairing pairing_with_theta(const RootSystem& rs, ThetaKind which);

// Alcove data for one type and divisibility class: the part multiset
// S(g, ell_m), its sum <rho, theta_j>, and the minimal non-degenerate level.
struct AlcoveParams {
  LieType type;
  int ell_m = 0;                 // 0: m | ell (theta_long), 1: m does not divide ell (theta_short)
  std::vector<long long> parts;  // sorted ascending; |parts| = rank
  long long rho_pairing = 0;     // equals the sum of parts
  long long ell0 = 0;            // least ell >= rho_pairing + 1 in the right class
  int lacing = 1;
};

// Selects theta_long for ell_m = 0 and theta_short for ell_m = 1.  Throws
// InvalidParity when ell_m = 1 is requested for a simply-laced type.
AlcoveParams alcove_params(const RootSystem& rs, int ell_m);
AlcoveParams alcove_params(LieType t, int ell_m);

// Bound s = ell - rho_pairing - 1 of the alcove inequality
// sum_i a_i parts_i <= s, after validating the level: throws ParityMismatch
// when divisibility of ell by m does not match ell_m, DegenerateLevel when
// ell <= rho_pairing (the message names ell0).
long long alcove_bound(const AlcoveParams& params, long long ell);

}  // namespace alcove
