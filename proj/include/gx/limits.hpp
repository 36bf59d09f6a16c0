#pragma once

#include <cstdlib>
#include <string>

namespace gx {

// Exhaustive-search dimension cap.  GX_MAX_DIM overrides the caller's default.
inline int dim_cap(int fallback) {
    if (const char* s = std::getenv("GX_MAX_DIM")) {
        try {
            int v = std::stoi(s);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return fallback;
}

}  // namespace gx
