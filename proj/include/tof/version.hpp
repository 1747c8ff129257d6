#pragma once

// Version stamped into emitted files so curves trace back to the code
// that produced them.

namespace tof {

inline constexpr char version_string[] = "1.0.0";

}  // namespace tof
