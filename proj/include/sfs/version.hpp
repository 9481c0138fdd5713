#pragma once

namespace sfs {

inline constexpr const char* kToolVersion = "0.1.0";
// Bump whenever the JSON layout or the cache payload changes shape.
inline constexpr int kSchemaVersion = 1;

}  // namespace sfs
