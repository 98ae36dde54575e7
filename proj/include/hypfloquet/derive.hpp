#pragma once

// Clipping and incenter derivations of a regular {p,q} tessellation, as count
// transformers and as combinatorial-map rewrites.

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "hypfloquet/error.hpp"
#include "hypfloquet/hypgeo.hpp"
#include "hypfloquet/rational.hpp"
#include "hypfloquet/surface.hpp"

namespace hypfloquet {

struct DerivedCounts {
    int64_t n_f = 0;
    int64_t n_e = 0;
    int64_t n_v = 0;
    SemiRegularSig signature{4, 6, 14};
    std::map<int, int64_t> face_census;  // face size -> count
    /// Every n_v / m_i is an integer (each face class covers all vertices once).
    bool color_class_integral = false;

    friend bool operator==(const DerivedCounts &, const DerivedCounts &) = default;
};

namespace detail {
inline RegularCounts require_regular_counts(const char *what, int p, int q, int chi) {
    auto counts = regular_counts_chi(RegularSig(p, q), chi);
    if (!counts) {
        throw DomainError("derive", std::string(what) + ": {" + std::to_string(p) + "," + std::to_string(q) +
                                        "} has non-integral counts at chi = " + std::to_string(chi));
    }
    return *counts;
}
}  // namespace detail

/// Clipping: each q-valent vertex is cut off, giving [2p,2p,q].
inline DerivedCounts clip_counts(int p, int q, int chi) {
    auto src = detail::require_regular_counts("clip", p, q, chi);
    DerivedCounts out;
    out.signature = SemiRegularSig(2 * p, 2 * p, q);
    out.n_f = src.faces + src.vertices;
    out.n_e = 3 * p * src.faces / 2;
    out.n_v = p * src.faces;
    out.face_census[2 * p] += src.faces;
    out.face_census[q] += src.vertices;
    out.color_class_integral = out.n_v % (2 * p) == 0 && out.n_v % q == 0;
    return out;
}

/// Incenter subdivision: [2p,2q,4] with one 2p-gon per face, one 2q-gon per
/// vertex and one square per edge of the source.
inline DerivedCounts incenter_counts(int p, int q, int chi) {
    auto src = detail::require_regular_counts("incenter", p, q, chi);
    DerivedCounts out;
    out.signature = SemiRegularSig(2 * p, 2 * q, 4);
    out.n_f = src.faces + src.edges + src.vertices;
    out.n_e = 3 * p * src.faces;
    out.n_v = 2 * p * src.faces;
    out.face_census[2 * p] += src.faces;
    out.face_census[2 * q] += src.vertices;
    out.face_census[4] += src.edges;
    out.color_class_integral = out.n_v % (2 * p) == 0 && out.n_v % (2 * q) == 0 && out.n_v % 4 == 0;
    return out;
}

/// Counts of a trivalent [m1,m2,m3] tiling of a surface with Euler characteristic chi:
/// n_v = chi / (1/m1 + 1/m2 + 1/m3 - 1/2), n_e = 3 n_v / 2, and mult(m) n_v / m
/// faces of each distinct size m. Empty when any of these is not a positive integer.
inline std::optional<DerivedCounts> semiregular_counts_direct(const SemiRegularSig &sig, int chi) {
    Rational denom = reciprocal_sum(sig.m()) - Rational{1, 2};
    Rational nv = Rational{chi} / denom;
    if (!nv.is_integer() || nv.num() <= 0 || nv.num() % 2 != 0) {
        return std::nullopt;
    }
    DerivedCounts out;
    out.signature = sig;
    out.n_v = nv.num();
    out.n_e = 3 * out.n_v / 2;
    std::map<int, int> mult;
    for (int m : sig.m()) {
        mult[m]++;
    }
    for (const auto &[m, k] : mult) {
        if ((k * out.n_v) % m != 0) {
            return std::nullopt;
        }
        out.face_census[m] = k * out.n_v / m;
        out.n_f += out.face_census[m];
    }
    out.color_class_integral = true;
    for (int m : sig.m()) {
        out.color_class_integral = out.color_class_integral && out.n_v % m == 0;
    }
    return out;
}

namespace detail {

// Walks the <a,b> orbit starting at `start`, alternating a then b; returns
// the flags visited and, for each step, which involution was used.
inline std::vector<std::pair<int, int>> alternating_walk(const FlagSystem &fl, int start, int a, int b) {
    std::vector<std::pair<int, int>> out;
    int f = start;
    int k = a;
    do {
        out.push_back({f, k});
        f = fl.involution(k)[f];
        k = (k == a) ? b : a;
    } while (!(f == start && k == a));
    return out;
}

inline void require_regular_complex(const char *what, const SurfaceComplex &c, int p, int q) {
    static_cast<void>(RegularSig(p, q));  // rejects non-hyperbolic {p,q}
    for (const auto &f : c.faces()) {
        if (static_cast<int>(f.size()) != p) {
            throw DomainError("derive", std::string(what) + ": source is not a {" + std::to_string(p) + "," +
                                            std::to_string(q) + "} complex (face of size " +
                                            std::to_string(f.size()) + ")");
        }
    }
    for (int d : c.vertex_degrees()) {
        if (d != q) {
            throw DomainError("derive", std::string(what) + ": source is not a {" + std::to_string(p) + "," +
                                            std::to_string(q) + "} complex (vertex of degree " + std::to_string(d) +
                                            ")");
        }
    }
}

// Assembles a complex whose faces are given as closed vertex walks together with
// the edge used at each step. Edge ends are (lower vertex, higher vertex).
struct WalkBuilder {
    int num_vertices = 0;
    std::vector<std::array<int, 2>> edge_ends;
    std::vector<std::vector<std::pair<int, int>>> faces;  // (edge, dir)

    void add_face(const std::vector<int> &walk, const std::vector<int> &edges) {
        std::vector<std::pair<int, int>> face;
        for (size_t i = 0; i < walk.size(); i++) {
            const auto &ends = edge_ends[edges[i]];
            face.push_back({edges[i], walk[i] == ends[0] ? 1 : -1});
        }
        faces.push_back(std::move(face));
    }

    SurfaceComplex build(int genus, bool orientable) const {
        std::vector<int> vertices(num_vertices);
        std::iota(vertices.begin(), vertices.end(), 0);
        std::vector<std::pair<int, std::array<int, 2>>> edges;
        for (size_t e = 0; e < edge_ends.size(); e++) {
            edges.push_back({static_cast<int>(e), edge_ends[e]});
        }
        return SurfaceComplex::create(orientable, genus, vertices, edges, faces);
    }
};

}  // namespace detail

/// Incenter subdivision as a map rewrite. New vertices are the flags of the
/// source; each flag is joined to its three images under s0, s1, s2. Faces are
/// the <s0,s1> orbits (2p-gons), <s1,s2> orbits (2q-gons) and <s0,s2> orbits
/// (squares), in that order.
inline SurfaceComplex incenter_complex(const SurfaceComplex &c, int p, int q) {
    detail::require_regular_complex("incenter", c, p, q);
    const FlagSystem &fl = c.flags();
    int n = static_cast<int>(fl.size());
    detail::WalkBuilder b;
    b.num_vertices = n;
    std::array<std::vector<int>, 3> edge_of;
    for (int k = 0; k < 3; k++) {
        edge_of[k].assign(n, -1);
    }
    for (int f = 0; f < n; f++) {
        for (int k = 0; k < 3; k++) {
            int g = fl.involution(k)[f];
            if (f < g) {
                edge_of[k][f] = edge_of[k][g] = static_cast<int>(b.edge_ends.size());
                b.edge_ends.push_back({f, g});
            }
        }
    }
    const std::array<std::array<int, 2>, 3> kinds = {{{0, 1}, {1, 2}, {0, 2}}};
    for (const auto &[a, bb] : kinds) {
        int count = 0;
        auto label = fl.orbits(a, bb, &count);
        std::vector<bool> done(count, false);
        for (int f = 0; f < n; f++) {
            if (done[label[f]]) {
                continue;
            }
            done[label[f]] = true;
            std::vector<int> walk;
            std::vector<int> edges;
            for (auto [flag, k] : detail::alternating_walk(fl, f, a, bb)) {
                walk.push_back(flag);
                edges.push_back(edge_of[k][flag]);
            }
            b.add_face(walk, edges);
        }
    }
    return b.build(c.genus(), c.orientable());
}

/// Clipping as a map rewrite. New vertices are the darts (<s2> orbits: one per
/// edge end). Each source edge keeps a middle segment joining its two darts, and
/// each face corner gains a cut edge {f, s1 f}. Faces: one 2p-gon per source
/// face, then one q-gon per source vertex.
inline SurfaceComplex clip_complex(const SurfaceComplex &c, int p, int q) {
    detail::require_regular_complex("clip", c, p, q);
    const FlagSystem &fl = c.flags();
    int n = static_cast<int>(fl.size());
    std::vector<int> dart(n, -1);
    int darts = 0;
    for (int f = 0; f < n; f++) {
        if (dart[f] < 0) {
            dart[f] = dart[fl.s2[f]] = darts++;
        }
    }
    detail::WalkBuilder b;
    b.num_vertices = darts;
    std::vector<int> segment(n, -1);
    std::vector<int> cut(n, -1);
    for (int f = 0; f < n; f++) {
        if (segment[f] < 0) {
            int e = static_cast<int>(b.edge_ends.size());
            int u = dart[f];
            int v = dart[fl.s0[f]];
            b.edge_ends.push_back({std::min(u, v), std::max(u, v)});
            for (int g : {f, fl.s0[f], fl.s2[f], fl.s0[fl.s2[f]]}) {
                segment[g] = e;
            }
        }
    }
    for (int f = 0; f < n; f++) {
        if (cut[f] < 0) {
            int e = static_cast<int>(b.edge_ends.size());
            int u = dart[f];
            int v = dart[fl.s1[f]];
            b.edge_ends.push_back({std::min(u, v), std::max(u, v)});
            cut[f] = cut[fl.s1[f]] = e;
        }
    }
    {
        int count = 0;
        auto label = fl.orbits(0, 1, &count);
        std::vector<bool> done(count, false);
        for (int f = 0; f < n; f++) {
            if (done[label[f]]) {
                continue;
            }
            done[label[f]] = true;
            std::vector<int> walk;
            std::vector<int> edges;
            for (auto [flag, k] : detail::alternating_walk(fl, f, 0, 1)) {
                walk.push_back(dart[flag]);
                edges.push_back(k == 0 ? segment[flag] : cut[flag]);
            }
            b.add_face(walk, edges);
        }
    }
    {
        int count = 0;
        auto label = fl.orbits(1, 2, &count);
        std::vector<bool> done(count, false);
        for (int f = 0; f < n; f++) {
            if (done[label[f]]) {
                continue;
            }
            done[label[f]] = true;
            std::vector<int> walk;
            std::vector<int> edges;
            int g = f;
            do {
                walk.push_back(dart[g]);
                edges.push_back(cut[g]);
                g = fl.s2[fl.s1[g]];
            } while (g != f);
            b.add_face(walk, edges);
        }
    }
    return b.build(c.genus(), c.orientable());
}

/// An explicit 3-colorable complex with the given signature, when one of the
/// constructions here yields it: the incenter subdivision of the fundamental
/// polygon, [8g,8g,4] (orientable) or [4g,4g,4] (non-orientable).
inline std::optional<SurfaceComplex> explicit_complex(const SemiRegularSig &sig, int genus, bool orientable) {
    if (genus < min_hyperbolic_genus(orientable)) {
        return std::nullopt;
    }
    int p = orientable ? 4 * genus : 2 * genus;
    if (sig.sorted() != SemiRegularSig(4, 2 * p, 2 * p)) {
        return std::nullopt;
    }
    return incenter_complex(fundamental_polygon(genus, orientable), p, p);
}

}  // namespace hypfloquet
