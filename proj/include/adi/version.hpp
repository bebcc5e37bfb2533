#pragma once

#include <cstdint>

namespace adi {

inline constexpr const char* kToolkitVersion = "0.1.0";

// Bumped whenever the binary model layout changes.
inline constexpr std::uint32_t kModelFormatVersion = 1;

}  // namespace adi
