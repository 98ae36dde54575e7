#pragma once

#include <string>

#include "hypfloquet/error.hpp"

namespace hypfloquet {

/// Euler characteristic of the closed surface of the given genus.
constexpr int euler_characteristic(int genus, bool orientable) noexcept {
    return orientable ? 2 - 2 * genus : 2 - genus;
}

/// Smallest genus carrying a hyperbolic metric.
constexpr int min_hyperbolic_genus(bool orientable) noexcept {
    return orientable ? 2 : 3;
}

inline std::string surface_name(int genus, bool orientable) {
    return std::string(orientable ? "orientable" : "non-orientable") + " genus " + std::to_string(genus);
}

inline void require_hyperbolic_genus(const char *module, int genus, bool orientable) {
    if (genus < min_hyperbolic_genus(orientable)) {
        throw DomainError(module, surface_name(genus, orientable) + " is below the hyperbolic minimum (" +
                                      std::to_string(min_hyperbolic_genus(orientable)) + ")");
    }
}

}  // namespace hypfloquet
