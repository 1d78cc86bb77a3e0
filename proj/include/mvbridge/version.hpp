#pragma once

namespace mvbridge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mvbridge
