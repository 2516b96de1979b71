#include "alcove/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

// Cartan matrix in the convention cartan[i][j] = <alpha_i, alpha_j-coroot>
// = 2(alpha_i, alpha_j) / (alpha_j, alpha_j), Bourbaki node numbering.
std::vector<std::vector<int>> cartan_matrix(LieType t) {
  const int r = t.rank();
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.series()) {
    case Series::A:
      for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
      break;
    case Series::B:
      // alpha_1..alpha_{r-1} long, alpha_r short
      for (int i = 0; i + 2 < r; ++i) bond(i, i + 1);
      a[r - 2][r - 1] = -2;
      a[r - 1][r - 2] = -1;
      break;
    case Series::C:
      // alpha_1..alpha_{r-1} short, alpha_r long
      for (int i = 0; i + 2 < r; ++i) bond(i, i + 1);
      a[r - 2][r - 1] = -1;
      a[r - 1][r - 2] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 3 < r; ++i) bond(i, i + 1);
      bond(r - 3, r - 2);
      bond(r - 3, r - 1);
      break;
    case Series::E:
      // chain 1-3-4-5-6(-7(-8)) with node 2 hanging off node 4
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      if (r >= 7) bond(5, 6);
      if (r == 8) bond(6, 7);
      bond(1, 3);
      break;
    case Series::F:
      bond(0, 1);
      a[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      a[2][1] = -1;
      bond(2, 3);
      break;
    case Series::G:
      a[0][1] = -1;  // alpha_1 short, alpha_2 long
      a[1][0] = -3;
      break;
  }
  return a;
}

// Solves cartan[i][j] * d_j = cartan[j][i] * d_i over the Dynkin graph and
// normalizes min d_i = 1.  Seeded with 6 so every intermediate ratio stays an
// integer (the only ratios are 1, 2, 3 and their inverses).
std::vector<int> derive_symmetrizer(const std::vector<std::vector<int>>& cartan) {
  const int r = static_cast<int>(cartan.size());
  std::vector<int> d(r, 0);
  d[0] = 6;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < r; ++j) {
      if (j == i || cartan[i][j] == 0 || d[j] != 0) continue;
      if ((d[i] * cartan[j][i]) % cartan[i][j] != 0) {
        throw std::logic_error("symmetrizer propagation left the integers");
      }
      d[j] = d[i] * cartan[j][i] / cartan[i][j];
      stack.push_back(j);
    }
  }
  int mn = *std::min_element(d.begin(), d.end());
  if (mn <= 0) throw std::logic_error("Dynkin graph not connected");
  for (int& v : d) {
    if (v % mn != 0) throw std::logic_error("symmetrizer not normalizable");
    v /= mn;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (cartan[i][j] * d[j] != cartan[j][i] * d[i]) {
        throw std::logic_error("symmetrizer does not symmetrize the Cartan matrix");
      }
  return d;
}

int height(const RootCoeffs& root) {
  return std::accumulate(root.begin(), root.end(), 0);
}

// (alpha, alpha) with (alpha_i, alpha_j) = cartan[i][j] * d_j.
long long squared_length(const RootCoeffs& root, const std::vector<std::vector<int>>& cartan,
                         const std::vector<int>& d) {
  const int r = static_cast<int>(root.size());
  long long acc = 0;
  for (int i = 0; i < r; ++i) {
    if (root[i] == 0) continue;
    for (int j = 0; j < r; ++j) {
      acc += static_cast<long long>(root[i]) * root[j] * cartan[i][j] * d[j];
    }
  }
  return acc;
}

// Positive roots by closure: starting from the simple roots, alpha + alpha_j
// is a root iff the alpha_j-string through alpha extends upward, i.e.
// q = p - <alpha, alpha_j-coroot> > 0 where p counts how far the string
// descends through known roots.  Processing by increasing height keeps every
// alpha - k*alpha_j already known when it is needed.
std::vector<RootCoeffs> closure_positive_roots(const std::vector<std::vector<int>>& cartan) {
  const int r = static_cast<int>(cartan.size());
  std::set<RootCoeffs> known;
  std::vector<RootCoeffs> queue;
  for (int i = 0; i < r; ++i) {
    RootCoeffs simple(r, 0);
    simple[i] = 1;
    known.insert(simple);
    queue.push_back(std::move(simple));
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    const RootCoeffs alpha = queue[head];
    for (int j = 0; j < r; ++j) {
      if (height(alpha) == 1 && alpha[j] == 1) continue;  // 2*alpha_j is never a root
      int p = 0;
      RootCoeffs down = alpha;
      while (true) {
        --down[j];
        if (down[j] < 0 || !known.count(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int i = 0; i < r; ++i) pairing += alpha[i] * cartan[i][j];
      if (p - pairing > 0) {
        RootCoeffs up = alpha;
        ++up[j];
        if (known.insert(up).second) queue.push_back(std::move(up));
      }
    }
  }
  std::vector<RootCoeffs> roots(known.begin(), known.end());
  std::sort(roots.begin(), roots.end(), [](const RootCoeffs& a, const RootCoeffs& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return roots;
}

// Unique root of maximal height among those of the given squared length.
RootCoeffs highest_of_length(const std::vector<RootCoeffs>& roots,
                             const std::vector<std::vector<int>>& cartan,
                             const std::vector<int>& d, long long sq) {
  const RootCoeffs* best = nullptr;
  bool tie = false;
  for (const auto& root : roots) {
    if (squared_length(root, cartan, d) != sq) continue;
    if (!best || height(root) > height(*best)) {
      best = &root;
      tie = false;
    } else if (height(root) == height(*best)) {
      tie = true;
    }
  }
  if (!best || tie) throw std::logic_error("highest root of requested length not unique");
  return *best;
}

}  // namespace

RootSystem build_root_system(LieType t) {
  RootSystem rs{.type = t};
  rs.cartan = cartan_matrix(t);
  rs.symmetrizer = derive_symmetrizer(rs.cartan);
  rs.lacing = *std::max_element(rs.symmetrizer.begin(), rs.symmetrizer.end());
  for (int di : rs.symmetrizer) {
    if (di != 1 && di != rs.lacing) throw std::logic_error("symmetrizer entry outside {1, m}");
  }
  rs.positive_roots = closure_positive_roots(rs.cartan);
  rs.theta_long = highest_of_length(rs.positive_roots, rs.cartan, rs.symmetrizer, 2 * rs.lacing);
  rs.theta_short = rs.lacing == 1
                       ? rs.theta_long
                       : highest_of_length(rs.positive_roots, rs.cartan, rs.symmetrizer, 2);
  rs.coxeter = height(rs.theta_long) + 1;

  long long rho_long = 0;
  for (int k = 0; k < t.rank(); ++k) rho_long += static_cast<long long>(rs.theta_long[k]) * rs.symmetrizer[k];
  if (rho_long % rs.lacing != 0) throw std::logic_error("<rho, theta_long> not divisible by m");
  rs.dual_coxeter = static_cast<int>(rho_long / rs.lacing) + 1;
  return rs;
}

ThetaPairing pairing_with_theta(const RootSystem& rs, ThetaKind which) {
  const RootCoeffs& theta = which == ThetaKind::Long ? rs.theta_long : rs.theta_short;
  ThetaPairing out;
  out.weight_pairings.reserve(theta.size());
  for (size_t i = 0; i < theta.size(); ++i) {
    long long li = static_cast<long long>(theta[i]) * rs.symmetrizer[i];
    out.weight_pairings.push_back(li);
    out.rho_pairing += li;
  }
  return out;
}

AlcoveParams alcove_params(const RootSystem& rs, int ell_m) {
  if (ell_m != 0 && ell_m != 1) {
    throw InvalidParity("ell_m must be 0 or 1, got " + std::to_string(ell_m));
  }
  if (rs.lacing == 1 && ell_m == 1) {
    throw InvalidParity("ell_m = 1 is vacuous for simply-laced type " + rs.type.name());
  }
  ThetaPairing pairing =
      pairing_with_theta(rs, ell_m == 0 ? ThetaKind::Long : ThetaKind::Short);

  AlcoveParams params{.type = rs.type, .ell_m = ell_m, .lacing = rs.lacing};
  params.parts = pairing.weight_pairings;
  std::sort(params.parts.begin(), params.parts.end());
  params.rho_pairing = pairing.rho_pairing;
  params.ell0 = params.rho_pairing + 1;
  while ((params.ell0 % rs.lacing == 0) != (ell_m == 0)) ++params.ell0;
  return params;
}

AlcoveParams alcove_params(LieType t, int ell_m) {
  return alcove_params(build_root_system(t), ell_m);
}

long long alcove_bound(const AlcoveParams& params, long long ell) {
  const bool divisible = ell % params.lacing == 0;
  if (divisible != (params.ell_m == 0)) {
    throw ParityMismatch("level " + std::to_string(ell) + (divisible ? " is" : " is not") +
                         " divisible by m = " + std::to_string(params.lacing) +
                         ", which contradicts ell_m = " + std::to_string(params.ell_m) + " for " +
                         params.type.name());
  }
  if (ell <= params.rho_pairing) {
    throw DegenerateLevel("level " + std::to_string(ell) + " is degenerate for " +
                              params.type.name() + ": minimal non-degenerate level is " +
                              std::to_string(params.ell0) + " when ell_m = " +
                              std::to_string(params.ell_m),
                          ell, params.ell0);
  }
  return ell - params.rho_pairing - 1;
}

}  // namespace alcove
