#pragma once

namespace gkpft {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gkpft
