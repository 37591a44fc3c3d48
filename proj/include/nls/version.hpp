#ifndef NLS_VERSION_HPP
#define NLS_VERSION_HPP

namespace nls {

inline constexpr const char* kVersion = "nls2d 0.1.0";

} // namespace nls

#endif
