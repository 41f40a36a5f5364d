#ifndef WIGNER_VERSION_HPP
#define WIGNER_VERSION_HPP

namespace wigner {

inline constexpr const char* kToolName = "wigner-toolkit";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace wigner

#endif
