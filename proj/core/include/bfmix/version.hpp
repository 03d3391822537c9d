#pragma once

#include <string_view>

namespace bfmix {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace bfmix
