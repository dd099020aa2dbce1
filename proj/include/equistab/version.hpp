#pragma once

namespace equistab {
inline constexpr const char* kToolName = "equistab";
inline constexpr const char* kToolVersion = "0.1.0";
} // namespace equistab
