#pragma once

namespace chebwav {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace chebwav
