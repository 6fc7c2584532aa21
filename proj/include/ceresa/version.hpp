#pragma once

namespace ceresa {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace ceresa
