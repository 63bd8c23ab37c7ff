#pragma once

#include <vector>

#include "lift/laurent.hpp"

namespace lift {

/// Classical period coefficients c_0..c_dmax, c_d = constant term of f^d.
/// c_0 is always 1.
struct PeriodSeq {
  std::vector<Int> coeffs;

  bool operator==(const PeriodSeq& other) const = default;
};

enum class PeriodStrategy {
  naive,   // iterated sparse multiplication, full support
  pruned,  // drop exponents unreachable from the remaining factors
};

PeriodSeq classical_period(const Laurent& f, int dmax,
                           PeriodStrategy strategy = PeriodStrategy::naive);

}  // namespace lift
