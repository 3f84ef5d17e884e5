#pragma once

namespace btx {

inline constexpr const char* version = "0.1.0";

}  // namespace btx
