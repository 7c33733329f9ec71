#pragma once

namespace entfluc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace entfluc
