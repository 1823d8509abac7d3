#pragma once

namespace pfv {

inline constexpr const char* kArtifactName = "pfvlab";
inline constexpr const char* kArtifactVersion = "0.1.0";

} // namespace pfv
