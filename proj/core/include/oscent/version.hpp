#pragma once

namespace oscent {

inline constexpr const char* library_version = "0.1.0";

} // namespace oscent
