#pragma once

namespace pursuit {

inline constexpr const char* kToolName = "pursuit";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace pursuit
