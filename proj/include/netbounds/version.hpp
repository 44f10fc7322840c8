#pragma once

#include <string_view>

namespace netbounds {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kToolVersion = "netbounds 0.1.0";

}  // namespace netbounds
