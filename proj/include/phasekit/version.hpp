#pragma once

namespace phasekit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace phasekit
