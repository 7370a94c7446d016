#pragma once

namespace cyclo {

inline constexpr const char* kToolVersion = "cycloheights 0.1.0";

}  // namespace cyclo
