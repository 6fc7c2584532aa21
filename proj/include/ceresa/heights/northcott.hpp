#pragma once

#include <limits>
#include <vector>

#include "ceresa/heights/height.hpp"
#include "ceresa/picard/picard.hpp"

namespace ceresa {

struct NorthcottRow {
  Rational t;
  CeresaVerdict verdict;
  HeightValue height;
};

/// All t = m/n in lowest terms with max(|m|, n) ≤ B and t ≠ ±1, with the verdict for
/// C_t: y³ = x⁴ + 2t·x² + 1 and ĥ(Q_t); rows above `bound` are dropped. Sorted by t.
std::vector<NorthcottRow> northcott_scan(unsigned B, double bound = std::numeric_limits<double>::infinity());

/// Single-threaded reference for northcott_scan.
std::vector<NorthcottRow> northcott_scan_serial(unsigned B,
                                                double bound = std::numeric_limits<double>::infinity());

}  // namespace ceresa
