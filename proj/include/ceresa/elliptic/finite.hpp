#pragma once

#include <cstdint>

#include "ceresa/elliptic/curve.hpp"

namespace ceresa {

/// #E(F_p) = 1 + Σ_x (1 + (x³ + d | p)). Parallel over x.
std::uint64_t group_order_fp(const CurveFp& e);

/// Single-threaded reference for group_order_fp.
std::uint64_t group_order_fp_serial(const CurveFp& e);

/// Exact order of P in E(F_p), refined from the group order prime by prime.
std::uint64_t order_fp(const CurveFp& e, const PointFp& p);

/// Same, reusing a known group order (or any multiple of the point order).
std::uint64_t order_fp(const CurveFp& e, const PointFp& p, std::uint64_t multiple);

}  // namespace ceresa
