#pragma once

namespace splus {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace splus
