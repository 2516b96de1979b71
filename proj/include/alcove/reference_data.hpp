#pragma once

#include <string>
#include <vector>

namespace alcove {

// One row of the published alcove-data table, instantiated at a concrete
// rank: the part multiset S(g, ell_m) and the minimal non-degenerate level.
struct ReferenceRow {
  char series = '?';
  int rank = 0;
  int ell_m = 0;
  std::vector<long long> parts;
  long long ell0 = 0;
};

// Embedded copy of data/table2.txt.  Self-verification and the tests compare
// derived values against it; the computation paths never consult it.
const std::string& reference_table_text();

// Parses the fixture format: '#' starts a comment, blank lines are skipped,
// data lines read "series rank ell_m part[,part...] ell0".
std::vector<ReferenceRow> parse_reference_table(const std::string& text);

// Parsed embedded table (cached).
const std::vector<ReferenceRow>& reference_table();

}  // namespace alcove
