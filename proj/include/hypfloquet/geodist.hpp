#pragma once

// Metric lower-bound style distance estimate: how many incenter-to-incenter
// hops of each kind a logical path as long as the surface systole needs.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hypfloquet/error.hpp"
#include "hypfloquet/hypgeo.hpp"
#include "hypfloquet/topology.hpp"

namespace hypfloquet {

struct DistanceEstimate {
    int d_X = 0;
    int d_Z = 0;
    int d = 0;
    int red_class = 0;  // index into the signature of the class playing red
    double systole_used = 0;
    std::array<double, 3> chords_used{};  // t_r for each choice of red class
    std::array<double, 3> gaps_used{};    // t_{g,b} for each choice of red class
    std::string convention_tag;
};

namespace detail {
// Ceiling that treats values within 1e-9 (relative) above an integer as that
// integer; the [6,6,8] systole is two t_r chords up to rounding.
inline int tolerant_ceil(double x) {
    return static_cast<int>(std::ceil(x - 1e-9 * std::max(1.0, std::abs(x))));
}
}  // namespace detail

/// Chord t_r between incenters of two red faces separated by one face of the
/// next class: incenter_chord(A(red, next), m_next).
inline double red_chord(const SemiRegularSig &sig, const MetricProfile &prof, int red, int via) {
    if (via == red) {
        throw DomainError("geodist", "intervening class must differ from the red class");
    }
    return incenter_chord(prof.apothem[red] + prof.apothem[via], sig[via]);
}

inline int estimate_dX(const SemiRegularSig &sig, int genus, bool orientable, int red_class,
                       const SystoleConvention &conv = {}) {
    if (red_class < 0 || red_class > 2) {
        throw DomainError("geodist", "red class must be 0, 1 or 2");
    }
    auto prof = semiregular_profile(sig);
    double t = red_chord(sig, prof, red_class, (red_class + 1) % 3);
    return 2 * detail::tolerant_ceil(systole(genus, orientable, conv) / t);
}

inline int estimate_dZ(const SemiRegularSig &sig, int genus, bool orientable, int red_class,
                       const SystoleConvention &conv = {}) {
    if (red_class < 0 || red_class > 2) {
        throw DomainError("geodist", "red class must be 0, 1 or 2");
    }
    auto prof = semiregular_profile(sig);
    double t = prof.apothem[(red_class + 1) % 3] + prof.apothem[(red_class + 2) % 3];
    return detail::tolerant_ceil(systole(genus, orientable, conv) / t);
}

/// Minimum of d_X and d_Z over the three choices of red class (ties go to the
/// lowest index), clamped to at least 2.
inline DistanceEstimate estimate_distance(const SemiRegularSig &sig, int genus, bool orientable,
                                          const SystoleConvention &conv = {}) {
    auto prof = semiregular_profile(sig);
    double L = systole(genus, orientable, conv);
    DistanceEstimate out;
    out.systole_used = L;
    int best = -1;
    for (int red = 0; red < 3; red++) {
        int a = (red + 1) % 3;
        int b = (red + 2) % 3;
        out.chords_used[red] = red_chord(sig, prof, red, a);
        out.gaps_used[red] = prof.apothem[a] + prof.apothem[b];
        int dx = 2 * detail::tolerant_ceil(L / out.chords_used[red]);
        int dz = detail::tolerant_ceil(L / out.gaps_used[red]);
        int d = std::min(dx, dz);
        if (best < 0 || d < best) {
            best = d;
            out.d_X = dx;
            out.d_Z = dz;
            out.red_class = red;
        }
    }
    out.d = std::max(2, best);
    out.convention_tag = "red=" + std::to_string(sig[out.red_class]) + ";systole=" + conv.tag(genus, orientable);
    if (best < 2) {
        out.convention_tag += ";clamped";
    }
    return out;
}

}  // namespace hypfloquet
