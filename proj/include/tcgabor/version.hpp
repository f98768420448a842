#pragma once

namespace tcgabor {
inline constexpr const char* kVersion = "0.1.0";
}
