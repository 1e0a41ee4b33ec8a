#pragma once

namespace coercheck {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace coercheck
