#pragma once

namespace geobeam {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace geobeam
