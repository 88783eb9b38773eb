#pragma once

namespace ac4x {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ac4x
