#pragma once

namespace hamres {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hamres
