#include "alcove/reference_data.hpp"

#include <cctype>
#include <sstream>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

std::vector<long long> parse_parts(const std::string& token, int line_no) {
  std::vector<long long> parts;
  std::istringstream in(token);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      long long value = std::stoll(item, &used);
      if (used != item.size() || value < 1) throw std::invalid_argument(item);
      parts.push_back(value);
    } catch (const std::exception&) {
      throw Error("reference table line " + std::to_string(line_no) + ": bad part '" + item +
                  "'");
    }
  }
  if (parts.empty()) {
    throw Error("reference table line " + std::to_string(line_no) + ": empty part list");
  }
  return parts;
}

}  // namespace

std::vector<ReferenceRow> parse_reference_table(const std::string& text) {
  std::vector<ReferenceRow> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string series, parts, extra;
    ReferenceRow row;
    if (!(fields >> series)) continue;  // blank line
    if (series.size() != 1 || series[0] < 'A' || series[0] > 'G' ||
        !(fields >> row.rank >> row.ell_m >> parts >> row.ell0) || (fields >> extra)) {
      throw Error("reference table line " + std::to_string(line_no) + ": malformed row '" +
                  line + "'");
    }
    row.series = series[0];
    row.parts = parse_parts(parts, line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> rows = parse_reference_table(reference_table_text());
  return rows;
}

}  // namespace alcove
