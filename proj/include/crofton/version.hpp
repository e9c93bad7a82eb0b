#pragma once

namespace crofton {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace crofton
