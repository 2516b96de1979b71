#include "alcove/verify.hpp"

#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alcove/alcove_oracle.hpp"
#include "alcove/genfunc.hpp"
#include "alcove/partitions.hpp"
#include "alcove/rank_engine.hpp"
#include "alcove/reference_data.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

namespace {

std::string parts_string(const std::vector<long long>& parts) {
  std::string out = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + "]";
}

void report(std::ostream& out, const std::string& name, bool ok, const std::string& detail) {
  out << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
  if (!detail.empty()) out << detail;
}

// Every reference row re-derived from the Cartan matrix, and every valid
// type/class pair up to rank 8 covered by exactly one row.
bool check_reference_table(std::ostream& out, bool inject_fault) {
  std::vector<ReferenceRow> rows = reference_table();
  if (inject_fault) {
    for (auto& row : rows) {
      if (row.series == 'G' && row.ell_m == 1) {
        row.ell0 += 1;  // deliberate corruption, test hook
        break;
      }
    }
  }

  std::ostringstream detail;
  int mismatches = 0;

  std::set<std::string> seen;
  for (const auto& row : rows) {
    const std::string key =
        std::string(1, row.series) + std::to_string(row.rank) + "/" + std::to_string(row.ell_m);
    if (!seen.insert(key).second) {
      ++mismatches;
      detail << "    duplicate row " << key << "\n";
      continue;
    }
    LieType t(static_cast<Series>(row.series), row.rank);
    AlcoveParams derived = alcove_params(t, row.ell_m);
    if (derived.parts != row.parts || derived.ell0 != row.ell0) {
      ++mismatches;
      detail << "    row " << row.series << row.rank << " ell_m=" << row.ell_m
             << ": derived parts=" << parts_string(derived.parts) << " ell0=" << derived.ell0
             << " vs reference parts=" << parts_string(row.parts) << " ell0=" << row.ell0
             << "\n";
    }
  }
  for (LieType t : all_types_up_to_rank(8)) {
    const RootSystem rs = build_root_system(t);
    for (int ell_m = 0; ell_m <= (rs.lacing > 1 ? 1 : 0); ++ell_m) {
      const std::string key = t.name() + "/" + std::to_string(ell_m);
      if (!seen.count(key)) {
        ++mismatches;
        detail << "    missing row " << key << "\n";
      }
    }
  }

  report(out, "reference table: " + std::to_string(rows.size()) + " rows re-derived",
         mismatches == 0, detail.str());
  return mismatches == 0;
}

// Triple equality gf == enumeration == cumulative partition count for every
// admissible level, plus the shifted-exponent identity of the series.
bool check_sweep(std::ostream& out, int max_rank, long long max_ell, bool inject_fault) {
  std::ostringstream detail;
  long long levels = 0;
  int mismatches = 0;
  constexpr int kMaxReported = 5;

  for (LieType t : all_types_up_to_rank(max_rank)) {
    const RootSystem rs = build_root_system(t);
    for (int ell_m = 0; ell_m <= (rs.lacing > 1 ? 1 : 0); ++ell_m) {
      const AlcoveParams params = alcove_params(rs, ell_m);
      if (params.ell0 > max_ell) continue;
      const std::vector<BigInt> coeffs =
          expand(rank_series(params), max_ell - params.rho_pairing - 1);
      for (long long ell = params.ell0; ell <= max_ell; ++ell) {
        if ((ell % params.lacing == 0) != (ell_m == 0)) continue;
        ++levels;
        const long long s = ell - params.rho_pairing - 1;
        BigInt gf = coeffs[static_cast<size_t>(s)];
        if (inject_fault) gf += 1;  // deliberate perturbation, test hook
        const BigInt direct = count_alcove(params, ell);
        const BigInt cumulative = count_partitions_upto(params.parts, s);
        const BigInt shifted = coeffs[static_cast<size_t>(ell - params.ell0 + params.ell_m)];
        if (gf != direct || gf != cumulative || gf != shifted) {
          ++mismatches;
          if (mismatches <= kMaxReported) {
            detail << "    " << t.name() << " ell=" << ell << ": gf=" << gf.str()
                   << " enum=" << direct.str() << " partitions=" << cumulative.str()
                   << " shifted-exponent=" << shifted.str() << "\n";
          }
        }
      }
    }
  }
  if (mismatches > kMaxReported) {
    detail << "    ... " << (mismatches - kMaxReported) << " further mismatches\n";
  }
  report(out,
         "cross-method sweep: " + std::to_string(levels) + " levels (rank <= " +
             std::to_string(max_rank) + ", ell <= " + std::to_string(max_ell) + ")",
         mismatches == 0, detail.str());
  return mismatches == 0;
}

bool check_worked_examples(std::ostream& out) {
  bool ok = true;
  std::ostringstream detail;

  // G2 at level 14: rank 10, and the series coefficients through x^8.
  const AlcoveParams g2_indiv = alcove_params(LieType(Series::G, 2), 1);
  const std::vector<BigInt> expansion = expand(rank_series(g2_indiv), 8);
  const std::vector<BigInt> expected = {1, 1, 2, 3, 4, 5, 7, 8, 10};
  if (expansion != expected) {
    ok = false;
    detail << "    G2 indivisible-class series expansion through x^8 is wrong\n";
  }
  const RankResult at14 = rank({.type = LieType(Series::G, 2), .ell = 14, .method = Method::Both});
  if (at14.rank != 10) {
    ok = false;
    detail << "    rank(G2, 14) = " << at14.rank.str() << ", expected 10\n";
  }

  // G2 at level 27: both routes must agree on 12.
  const AlcoveParams g2_div = alcove_params(LieType(Series::G, 2), 0);
  const BigInt gf27 = rank_coefficient(g2_div, 27);
  const BigInt enum27 = count_alcove(g2_div, 27);
  if (gf27 != enum27 || gf27 != 12) {
    ok = false;
    detail << "    G2 at level 27: gf=" << gf27.str() << " enum=" << enum27.str()
           << ", expected 12 from both\n";
  }

  report(out, "worked examples: G2 at levels 14 and 27", ok, detail.str());
  out << "  note: a published worked example states rank 15 for G2 at level 27; the series\n"
         "  expansion displayed alongside it yields 12, and both methods here agree on 12.\n"
         "  The value 15 is treated as an erratum.\n";
  return ok;
}

}  // namespace

bool run_verification(const VerifyOptions& opts, std::ostream& out) {
  if (!opts.quiet) {
    out << "self-verification: reference table, cross-method sweep, worked examples\n";
  }
  bool ok = true;
  ok &= check_reference_table(out, opts.inject_fixture_fault);
  ok &= check_sweep(out, opts.max_rank, opts.max_ell, opts.inject_method_fault);
  ok &= check_worked_examples(out);
  out << (ok ? "verification passed" : "verification FAILED") << "\n";
  return ok;
}

}  // namespace alcove
