#pragma once

namespace qheng {

inline constexpr const char *kVersion = "0.1.0";

} // namespace qheng
