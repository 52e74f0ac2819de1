#pragma once

namespace braidforge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace braidforge
