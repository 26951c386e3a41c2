#pragma once

namespace lue {
inline constexpr const char* kVersion = "0.1.0";
}
