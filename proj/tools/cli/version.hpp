#pragma once

namespace radscat::cli {
#ifdef RADSCAT_VERSION
inline constexpr const char* kVersion = RADSCAT_VERSION;
#else
inline constexpr const char* kVersion = "0.0.0";
#endif
}  // namespace radscat::cli
