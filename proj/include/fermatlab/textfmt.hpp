#pragma once

#include <cstdio>
#include <string>

namespace fermatlab {

/// Fixed 12-significant-digit rendering used for every float that lands in a
/// report or CSV cell, so identical runs produce identical bytes.
inline std::string fmtSig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

}  // namespace fermatlab
