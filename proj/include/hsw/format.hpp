#ifndef HSW_FORMAT_HPP
#define HSW_FORMAT_HPP

#include <cstdio>
#include <string>

namespace hsw {

// All floating-point output goes through this: 17 significant digits is
// enough to round-trip a double exactly, which keeps repeated runs
// byte-identical.
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace hsw

#endif
