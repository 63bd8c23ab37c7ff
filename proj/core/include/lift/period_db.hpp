#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lift/ints.hpp"

namespace lift {

/// One known-period record from a JSON Lines database.
struct PeriodRecord {
  std::string name;
  std::vector<Int> coeffs;  // begins with 1
  std::string source;       // file path or URL the record came from
};

/// Parse a JSONL stream: one {"name": str, "coeffs": [int,...]} object per
/// line. Malformed lines raise an error naming the line number.
std::vector<PeriodRecord> parse_period_db(std::istream& in, const std::string& source);

struct PeriodMatch {
  const PeriodRecord* record;
  std::size_t overlap;  // compared prefix length
};

/// Records whose coefficients agree with the computed sequence on the
/// common prefix, requiring at least min_overlap compared entries.
std::vector<PeriodMatch> match_period(const std::vector<PeriodRecord>& db,
                                      const std::vector<Int>& coeffs,
                                      std::size_t min_overlap);

}  // namespace lift
