#pragma once

// Metric quantities of regular {p,q} and trivalent semi-regular [m1,m2,m3]
// tessellations of the hyperbolic plane (curvature -1).

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <string>

#include "hypfloquet/error.hpp"
#include "hypfloquet/rational.hpp"
#include "hypfloquet/topology.hpp"

namespace hypfloquet {

/// {p,q}: p-gon faces, q faces at each vertex. Always hyperbolic (1/p + 1/q < 1/2).
class RegularSig {
   public:
    RegularSig(int p, int q) : p_(p), q_(q) {
        if (p < 3 || q < 3) {
            throw DomainError("hypgeo", "{" + std::to_string(p) + "," + std::to_string(q) + "} needs p, q >= 3");
        }
        if (p * q <= 2 * p + 2 * q) {
            std::string kind = p * q == 2 * p + 2 * q ? "Euclidean" : "spherical";
            throw DomainError("hypgeo", kind + " pair " + str() + " is not hyperbolic");
        }
    }

    int p() const noexcept {
        return p_;
    }
    int q() const noexcept {
        return q_;
    }
    std::string str() const {
        return "{" + std::to_string(p_) + "," + std::to_string(q_) + "}";
    }
    friend bool operator==(const RegularSig &, const RegularSig &) = default;

   private:
    int p_;
    int q_;
};

/// Sum of 1/m_i, exactly.
inline Rational reciprocal_sum(std::span<const int> m) {
    Rational s{0};
    for (int x : m) {
        s = s + Rational{1, x};
    }
    return s;
}

/// Angle-sum test for a vertex type: sum (m_i - 2) pi / m_i > 2 pi.
/// Evaluated exactly as sum 1/m_i < (len - 2) / 2.
inline bool vertex_type_admissible(std::span<const int> m) {
    for (int x : m) {
        if (x < 3) {
            throw DomainError("hypgeo", "vertex type entries must be >= 3");
        }
    }
    return reciprocal_sum(m) < Rational{static_cast<int64_t>(m.size()) - 2, 2};
}

/// Trivalent vertex type [m1,m2,m3], kept in the cyclic order given.
class SemiRegularSig {
   public:
    explicit SemiRegularSig(std::array<int, 3> m) : m_(m) {
        for (int x : m_) {
            if (x < 3) {
                throw DomainError("hypgeo", str() + " needs every entry >= 3");
            }
        }
        if (!vertex_type_admissible(m_)) {
            bool flat = reciprocal_sum(m_) == Rational{1, 2};
            throw DomainError("hypgeo", std::string(flat ? "Euclidean" : "spherical") + " triple " + str() +
                                            " is not hyperbolic");
        }
    }
    SemiRegularSig(int m1, int m2, int m3) : SemiRegularSig(std::array<int, 3>{m1, m2, m3}) {
    }

    const std::array<int, 3> &m() const noexcept {
        return m_;
    }
    int operator[](size_t i) const noexcept {
        return m_[i];
    }
    SemiRegularSig sorted() const {
        auto s = m_;
        std::sort(s.begin(), s.end());
        return SemiRegularSig(s);
    }
    std::string str() const {
        return "[" + std::to_string(m_[0]) + "," + std::to_string(m_[1]) + "," + std::to_string(m_[2]) + "]";
    }
    friend bool operator==(const SemiRegularSig &, const SemiRegularSig &) = default;
    friend auto operator<=>(const SemiRegularSig &a, const SemiRegularSig &b) {
        return a.m_ <=> b.m_;
    }

   private:
    std::array<int, 3> m_;
};

namespace detail {
inline double cot(double x) {
    return std::cos(x) / std::sin(x);
}
}  // namespace detail

/// Edge length of {p,q}: 2 arccosh(cos(pi/p) / sin(pi/q)).
inline double regular_edge_length_half_angle_form(const RegularSig &sig) {
    using std::numbers::pi;
    return 2 * std::acosh(std::cos(pi / sig.p()) / std::sin(pi / sig.q()));
}

/// Edge length of {p,q}: arccosh((cos^2(pi/q) + cos(2pi/p)) / sin^2(pi/q)).
inline double regular_edge_length_single_arccosh_form(const RegularSig &sig) {
    using std::numbers::pi;
    double s = std::sin(pi / sig.q());
    double c = std::cos(pi / sig.q());
    return std::acosh((c * c + std::cos(2 * pi / sig.p())) / (s * s));
}

/// Edge length of {p,q}. Both closed forms are evaluated and must agree to 1e-12.
inline double regular_edge_length(const RegularSig &sig) {
    double l = regular_edge_length_half_angle_form(sig);
    double alt = regular_edge_length_single_arccosh_form(sig);
    if (std::abs(l - alt) > 1e-12 * std::max(1.0, l)) {
        throw std::logic_error("hypgeo: edge length closed forms disagree for " + sig.str());
    }
    return l;
}

struct ApothemCircumradius {
    double apothem;
    double circumradius;
};

/// Inradius a = arccosh(csc(pi/p) cos(pi/q)), circumradius r = arccosh(cot(pi/p) cot(pi/q)).
inline ApothemCircumradius regular_apothem_circumradius(const RegularSig &sig) {
    using std::numbers::pi;
    double a = std::acosh(std::cos(pi / sig.q()) / std::sin(pi / sig.p()));
    double r = std::acosh(detail::cot(pi / sig.p()) * detail::cot(pi / sig.q()));
    return {a, r};
}

/// Area of one p-gon face of {p,q} (Gauss-Bonnet): (pq - 2p - 2q) pi / q.
inline double polygon_area(const RegularSig &sig) {
    int p = sig.p();
    int q = sig.q();
    return (p * q - 2 * p - 2 * q) * std::numbers::pi / q;
}

/// Area of the closed hyperbolic surface: -2 pi chi.
inline double surface_area(int genus, bool orientable) {
    require_hyperbolic_genus("hypgeo", genus, orientable);
    return -2 * std::numbers::pi * euler_characteristic(genus, orientable);
}

/// Left-hand side of the edge-length equation minus pi, as a function of
/// c = cosh(l/2). Strictly decreasing in c on [1, inf).
inline double semiregular_angle_defect(const SemiRegularSig &sig, double c) {
    using std::numbers::pi;
    double total = 0;
    for (int m : sig.m()) {
        total += std::asin(std::min(1.0, std::cos(pi / m) / c));
    }
    return total - pi;
}

/// Residual of the edge-length equation at edge length l.
inline double semiregular_residual(const SemiRegularSig &sig, double l) {
    return semiregular_angle_defect(sig, std::cosh(l / 2));
}

/// Edge length of [m1,m2,m3]: the unique l > 0 with
/// sum_i arcsin(cos(pi/m_i) / cosh(l/2)) = pi.
/// Bisection on c = cosh(l/2) over [1, 1e6] followed by two Newton steps.
inline double semiregular_edge_length(const SemiRegularSig &sig) {
    using std::numbers::pi;
    double lo = 1.0;
    double hi = 1e6;
    // f(lo) > 0 by hyperbolicity; f(hi) < 0.
    for (int iter = 0; iter < 200 && hi - lo > 1e-16 * hi; iter++) {
        double mid = 0.5 * (lo + hi);
        if (semiregular_angle_defect(sig, mid) > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double c = 0.5 * (lo + hi);
    for (int step = 0; step < 2; step++) {
        double f = semiregular_angle_defect(sig, c);
        double df = 0;
        for (int m : sig.m()) {
            double k = std::cos(pi / m);
            double u = k / c;
            df -= k / (c * c * std::sqrt(1 - u * u));
        }
        double next = c - f / df;
        if (!(next > 1.0) || !std::isfinite(next)) {
            break;
        }
        c = next;
    }
    double l = 2 * std::acosh(c);
    if (std::abs(semiregular_residual(sig, l)) >= 1e-10) {
        throw std::logic_error("hypgeo: edge length solve did not converge for " + sig.str());
    }
    return l;
}

/// Edge length, apothems, circumradii and incenter gaps of [m1,m2,m3].
/// gap[i] is the distance between the incenters of adjacent m_i- and m_{i+1}-gons.
struct MetricProfile {
    double edge_length = 0;
    std::array<double, 3> apothem{};
    std::array<double, 3> circumradius{};
    std::array<double, 3> incenter_gap{};
};

inline MetricProfile semiregular_profile(const SemiRegularSig &sig) {
    using std::numbers::pi;
    MetricProfile out;
    out.edge_length = semiregular_edge_length(sig);
    double half = out.edge_length / 2;
    for (size_t i = 0; i < 3; i++) {
        out.apothem[i] = std::asinh(std::tanh(half) * detail::cot(pi / sig[i]));
        out.circumradius[i] = std::acosh(std::cosh(out.apothem[i]) * std::cosh(half));
    }
    for (size_t i = 0; i < 3; i++) {
        out.incenter_gap[i] = out.apothem[i] + out.apothem[(i + 1) % 3];
    }
    return out;
}

/// Distance between the incenters of two faces that are both adjacent to an
/// m_next-gon, at gap `gap` from its incenter, and two corners apart around it:
/// arccosh(cosh^2(gap) - sinh^2(gap) cos(4 pi / m_next)).
inline double incenter_chord(double gap, int m_next) {
    if (!(gap > 0)) {
        throw DomainError("hypgeo", "incenter gap must be positive");
    }
    if (m_next < 3) {
        throw DomainError("hypgeo", "intervening polygon needs at least 3 sides");
    }
    double ch = std::cosh(gap);
    double sh = std::sinh(gap);
    return std::acosh(ch * ch - sh * sh * std::cos(4 * std::numbers::pi / m_next));
}

/// How the logical-path length is chosen on a non-orientable surface of odd
/// genus, where no closed form is proven. Unset means 2 arccosh(cot(pi/2g)),
/// the value read off the 2g-gon fundamental region.
struct SystoleConvention {
    std::function<double(int genus)> odd_nonorientable;
    std::string odd_nonorientable_tag = "custom";

    std::string tag(int genus, bool orientable) const {
        if (orientable) {
            return "4g-gon";
        }
        if (genus % 2 == 0) {
            return "2g-gon(even)";
        }
        return odd_nonorientable ? odd_nonorientable_tag : "2g-gon(odd)";
    }
};

/// Length of the shortest homologically non-trivial closed geodesic on the
/// fundamental-polygon surface. Orientable: 2 arccosh(cot(pi/4g)).
/// Non-orientable: 2 arccosh(cot(pi/2g)), which for g = 2h equals the orientable
/// value at genus h.
inline double systole(int genus, bool orientable, const SystoleConvention &convention = {}) {
    using std::numbers::pi;
    require_hyperbolic_genus("hypgeo", genus, orientable);
    if (orientable) {
        return 2 * std::acosh(detail::cot(pi / (4 * genus)));
    }
    if (genus % 2 == 1 && convention.odd_nonorientable) {
        return convention.odd_nonorientable(genus);
    }
    return 2 * std::acosh(detail::cot(pi / (2 * genus)));
}

}  // namespace hypfloquet
