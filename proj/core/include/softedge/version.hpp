#pragma once

namespace softedge {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace softedge
