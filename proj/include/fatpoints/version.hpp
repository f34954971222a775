#pragma once

namespace fatpoints {

inline constexpr const char* version = "0.1.0";

}  // namespace fatpoints
