#pragma once

#include <string_view>

namespace qvol {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace qvol
