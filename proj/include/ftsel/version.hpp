#pragma once

namespace ftsel {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ftsel
