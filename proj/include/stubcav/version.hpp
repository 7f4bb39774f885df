#pragma once

namespace stubcav {

inline constexpr const char* version = "0.1.0";

}  // namespace stubcav
