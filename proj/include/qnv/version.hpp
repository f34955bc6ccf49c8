#pragma once

namespace qnv {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qnv
