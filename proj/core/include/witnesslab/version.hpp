#pragma once

namespace witnesslab {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace witnesslab
