#pragma once

namespace twistor {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace twistor
