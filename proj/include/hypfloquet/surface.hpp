#pragma once

// Closed 2-complexes stored as combinatorial maps: every face is a cyclic
// sequence of directed edge slots, and the flag system built from those slots
// drives validation, orientability, duality and the derivations.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "hypfloquet/error.hpp"
#include "hypfloquet/hypgeo.hpp"
#include "hypfloquet/topology.hpp"

namespace hypfloquet {

struct EdgeSlot {
    int edge;  // edge index
    int dir;   // +1 traverses ends[0] -> ends[1], -1 the reverse
    friend bool operator==(const EdgeSlot &, const EdgeSlot &) = default;
};

struct EdgeRecord {
    int id;
    std::array<int, 2> ends;  // vertex indices
    friend bool operator==(const EdgeRecord &, const EdgeRecord &) = default;
};

/// Flags of a combinatorial map with the three fixed-point-free involutions.
/// s0 changes the vertex, s1 the edge and s2 the face. For face slot `s`,
/// flag 2s sits at the start of the slot and 2s+1 at its end.
struct FlagSystem {
    std::vector<int> s0, s1, s2;

    size_t size() const noexcept {
        return s0.size();
    }
    const std::vector<int> &involution(int k) const {
        return k == 0 ? s0 : (k == 1 ? s1 : s2);
    }

    /// Orbit label of every flag under the group generated by involutions a and b.
    /// Labels are numbered by the smallest flag in each orbit.
    std::vector<int> orbits(int a, int b, int *count = nullptr) const {
        return orbits_of({a, b}, count);
    }
    std::vector<int> orbits_of(std::initializer_list<int> generators, int *count = nullptr) const {
        std::vector<int> label(size(), -1);
        int next = 0;
        std::vector<int> stack;
        for (size_t start = 0; start < size(); start++) {
            if (label[start] >= 0) {
                continue;
            }
            label[start] = next;
            stack.assign(1, static_cast<int>(start));
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                for (int k : generators) {
                    int g = involution(k)[f];
                    if (label[g] < 0) {
                        label[g] = next;
                        stack.push_back(g);
                    }
                }
            }
            next++;
        }
        if (count) {
            *count = next;
        }
        return label;
    }
};

/// Immutable closed surface complex. Construct through `create`, which
/// validates everything; derived complexes are built the same way.
class SurfaceComplex {
   public:
    /// Validates and builds. Vertex and edge arguments are external ids;
    /// face slots refer to edge ids.
    static SurfaceComplex create(bool orientable, int genus, std::vector<int> vertex_ids,
                                 const std::vector<std::pair<int, std::array<int, 2>>> &edges,
                                 const std::vector<std::vector<std::pair<int, int>>> &faces) {
        SurfaceComplex c;
        c.orientable_ = orientable;
        c.genus_ = genus;
        c.vertex_ids_ = std::move(vertex_ids);
        if (genus < 0 || (!orientable && genus < 1)) {
            throw DomainError("surface", "invalid genus " + std::to_string(genus) + " for " +
                                             (orientable ? "orientable" : "non-orientable") + " surface");
        }
        std::map<int, int> vindex;
        for (size_t i = 0; i < c.vertex_ids_.size(); i++) {
            if (!vindex.emplace(c.vertex_ids_[i], static_cast<int>(i)).second) {
                throw DomainError("surface", "duplicate vertex id " + std::to_string(c.vertex_ids_[i]));
            }
        }
        std::map<int, int> eindex;
        for (const auto &[id, ends] : edges) {
            if (!eindex.emplace(id, static_cast<int>(c.edges_.size())).second) {
                throw DomainError("surface", "duplicate edge id " + std::to_string(id));
            }
            EdgeRecord e{id, {0, 0}};
            for (int k = 0; k < 2; k++) {
                auto it = vindex.find(ends[k]);
                if (it == vindex.end()) {
                    throw DomainError("surface", "edge " + std::to_string(id) + " names unknown vertex " +
                                                     std::to_string(ends[k]));
                }
                e.ends[k] = it->second;
            }
            c.edges_.push_back(e);
        }
        for (size_t f = 0; f < faces.size(); f++) {
            if (faces[f].empty()) {
                throw DomainError("surface", "face " + std::to_string(f) + " has an empty boundary");
            }
            std::vector<EdgeSlot> boundary;
            for (const auto &[edge_id, dir] : faces[f]) {
                auto it = eindex.find(edge_id);
                if (it == eindex.end()) {
                    throw DomainError("surface", "face " + std::to_string(f) + " names unknown edge " +
                                                     std::to_string(edge_id));
                }
                if (dir != 1 && dir != -1) {
                    throw DomainError("surface", "face " + std::to_string(f) + " has direction " +
                                                     std::to_string(dir) + " (expected +1 or -1)");
                }
                boundary.push_back({it->second, dir});
            }
            c.faces_.push_back(std::move(boundary));
        }
        c.validate();
        return c;
    }

    bool orientable() const noexcept {
        return orientable_;
    }
    int genus() const noexcept {
        return genus_;
    }
    int num_vertices() const noexcept {
        return static_cast<int>(vertex_ids_.size());
    }
    int num_edges() const noexcept {
        return static_cast<int>(edges_.size());
    }
    int num_faces() const noexcept {
        return static_cast<int>(faces_.size());
    }
    const std::vector<int> &vertex_ids() const noexcept {
        return vertex_ids_;
    }
    const std::vector<EdgeRecord> &edges() const noexcept {
        return edges_;
    }
    const std::vector<std::vector<EdgeSlot>> &faces() const noexcept {
        return faces_;
    }
    const FlagSystem &flags() const noexcept {
        return flags_;
    }

    int tail(const EdgeSlot &s) const {
        return edges_[s.edge].ends[s.dir > 0 ? 0 : 1];
    }
    int head(const EdgeSlot &s) const {
        return edges_[s.edge].ends[s.dir > 0 ? 1 : 0];
    }

    /// Face-orientation propagation over the edge gluings.
    bool orientation_consistent() const {
        return propagate_orientation();
    }

    /// Global slot index of flag f, and the face that slot belongs to.
    int slot_of_flag(int f) const noexcept {
        return f / 2;
    }
    int face_of_slot(int s) const noexcept {
        return slot_face_[s];
    }
    const EdgeSlot &slot(int s) const noexcept {
        return slots_[s];
    }
    int edge_of_flag(int f) const noexcept {
        return slots_[f / 2].edge;
    }
    int face_of_flag(int f) const noexcept {
        return slot_face_[f / 2];
    }
    int vertex_of_flag(int f) const {
        const EdgeSlot &s = slots_[f / 2];
        return (f % 2 == 0) ? tail(s) : head(s);
    }

    /// Number of edge ends at each vertex (a loop counts twice).
    std::vector<int> vertex_degrees() const {
        std::vector<int> deg(vertex_ids_.size(), 0);
        for (const auto &e : edges_) {
            deg[e.ends[0]]++;
            deg[e.ends[1]]++;
        }
        return deg;
    }

    /// Census face size -> count.
    std::map<int, int64_t> face_census() const {
        std::map<int, int64_t> out;
        for (const auto &f : faces_) {
            out[static_cast<int>(f.size())]++;
        }
        return out;
    }

    /// The two faces that use each edge.
    std::vector<std::array<int, 2>> edge_faces() const {
        std::vector<std::array<int, 2>> out(edges_.size(), {-1, -1});
        for (size_t s = 0; s < slots_.size(); s++) {
            auto &pair = out[slots_[s].edge];
            pair[pair[0] < 0 ? 0 : 1] = slot_face_[s];
        }
        return out;
    }

   private:
    SurfaceComplex() = default;

    void validate() {
        std::vector<int> uses(edges_.size(), 0);
        for (size_t f = 0; f < faces_.size(); f++) {
            const auto &b = faces_[f];
            for (size_t i = 0; i < b.size(); i++) {
                uses[b[i].edge]++;
                if (head(b[i]) != tail(b[(i + 1) % b.size()])) {
                    throw DomainError("surface", "face " + std::to_string(f) + " boundary is not a closed walk (slot " +
                                                     std::to_string(i) + ")");
                }
            }
        }
        for (size_t e = 0; e < edges_.size(); e++) {
            if (uses[e] < 2) {
                throw DomainError("surface", "open surface: edge " + std::to_string(edges_[e].id) + " lies on " +
                                                 std::to_string(uses[e]) + " face slot(s)");
            }
            if (uses[e] > 2) {
                throw DomainError("surface", "edge " + std::to_string(edges_[e].id) + " lies on " +
                                                 std::to_string(uses[e]) + " face slots (expected 2)");
            }
        }
        build_flags();

        int vertex_orbits = 0;
        auto vlabel = flags_.orbits(1, 2, &vertex_orbits);
        std::vector<int> orbit_vertex(vertex_orbits, -1);
        std::vector<int> orbits_at(vertex_ids_.size(), 0);
        for (size_t f = 0; f < flags_.size(); f++) {
            int o = vlabel[f];
            if (orbit_vertex[o] < 0) {
                orbit_vertex[o] = vertex_of_flag(static_cast<int>(f));
                orbits_at[orbit_vertex[o]]++;
            }
        }
        for (size_t v = 0; v < vertex_ids_.size(); v++) {
            if (orbits_at[v] == 0) {
                throw DomainError("surface", "vertex " + std::to_string(vertex_ids_[v]) + " lies on no face");
            }
            if (orbits_at[v] > 1) {
                throw DomainError("surface", "vertex " + std::to_string(vertex_ids_[v]) +
                                                 " is singular (its link has " + std::to_string(orbits_at[v]) +
                                                 " components)");
            }
        }
        int components = 0;
        flags_.orbits_of({0, 1, 2}, &components);
        if (components != 1) {
            throw DomainError("surface", "complex is disconnected (" + std::to_string(components) + " components)");
        }
        int chi = num_vertices() - num_edges() + num_faces();
        int expected = hypfloquet::euler_characteristic(genus_, orientable_);
        if (chi != expected) {
            throw DomainError("surface", "Euler characteristic " + std::to_string(chi) + " does not match " +
                                             surface_name(genus_, orientable_) + " (expected " +
                                             std::to_string(expected) + ")");
        }
        if (propagate_orientation() != orientable_) {
            throw DomainError("surface", std::string("declared ") + (orientable_ ? "orientable" : "non-orientable") +
                                             " but face orientations say otherwise");
        }
    }

    void build_flags() {
        slots_.clear();
        slot_face_.clear();
        std::vector<int> face_start;
        for (size_t f = 0; f < faces_.size(); f++) {
            face_start.push_back(static_cast<int>(slots_.size()));
            for (const auto &s : faces_[f]) {
                slots_.push_back(s);
                slot_face_.push_back(static_cast<int>(f));
            }
        }
        size_t n = 2 * slots_.size();
        flags_.s0.assign(n, -1);
        flags_.s1.assign(n, -1);
        flags_.s2.assign(n, -1);
        std::vector<std::vector<int>> edge_slots(edges_.size());
        for (size_t f = 0; f < faces_.size(); f++) {
            int len = static_cast<int>(faces_[f].size());
            for (int i = 0; i < len; i++) {
                int s = face_start[f] + i;
                int next = face_start[f] + (i + 1) % len;
                flags_.s0[2 * s] = 2 * s + 1;
                flags_.s0[2 * s + 1] = 2 * s;
                flags_.s1[2 * s + 1] = 2 * next;
                flags_.s1[2 * next] = 2 * s + 1;
                edge_slots[slots_[s].edge].push_back(s);
            }
        }
        // s2 pairs flags at the same end of the edge (not the same vertex id, which
        // would be ambiguous for loops).
        for (const auto &pair : edge_slots) {
            int a = pair[0];
            int b = pair[1];
            bool same = slots_[a].dir == slots_[b].dir;
            flags_.s2[2 * a] = same ? 2 * b : 2 * b + 1;
            flags_.s2[2 * a + 1] = same ? 2 * b + 1 : 2 * b;
            flags_.s2[flags_.s2[2 * a]] = 2 * a;
            flags_.s2[flags_.s2[2 * a + 1]] = 2 * a + 1;
        }
    }

    // BFS over faces choosing a sign per face so that each edge is traversed
    // once in each direction. False on the first conflict.
    bool propagate_orientation() const {
        std::vector<std::vector<std::pair<int, int>>> uses(edges_.size());  // (face, dir)
        std::vector<std::vector<int>> incident(faces_.size());
        for (size_t s = 0; s < slots_.size(); s++) {
            uses[slots_[s].edge].push_back({slot_face_[s], slots_[s].dir});
            incident[slot_face_[s]].push_back(slots_[s].edge);
        }
        std::vector<int> sign(faces_.size(), 0);
        std::queue<int> todo;
        sign[0] = 1;
        todo.push(0);
        while (!todo.empty()) {
            int f = todo.front();
            todo.pop();
            for (int e : incident[f]) {
                auto [fa, da] = uses[e][0];
                auto [fb, db] = uses[e][1];
                if (sign[fa] == 0) {
                    std::swap(fa, fb);
                    std::swap(da, db);
                }
                int want = -sign[fa] * da * db;
                if (sign[fb] == 0) {
                    sign[fb] = want;
                    todo.push(fb);
                } else if (sign[fb] != want) {
                    return false;
                }
            }
        }
        return true;
    }

    bool orientable_ = true;
    int genus_ = 0;
    std::vector<int> vertex_ids_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::vector<EdgeSlot>> faces_;
    std::vector<EdgeSlot> slots_;
    std::vector<int> slot_face_;
    FlagSystem flags_;

    friend bool operator==(const SurfaceComplex &a, const SurfaceComplex &b) {
        return a.orientable_ == b.orientable_ && a.genus_ == b.genus_ && a.vertex_ids_ == b.vertex_ids_ &&
               a.edges_ == b.edges_ && a.faces_ == b.faces_;
    }
};

inline int euler_characteristic(const SurfaceComplex &c) {
    return c.num_vertices() - c.num_edges() + c.num_faces();
}

/// True iff faces can be oriented so every edge is traversed once each way.
inline bool check_orientability(const SurfaceComplex &c) {
    return c.orientation_consistent();
}

/// Same question answered on the flag system: the map is orientable iff its
/// flag graph is bipartite under s0, s1, s2.
inline bool flag_graph_bipartite(const SurfaceComplex &c) {
    const FlagSystem &fl = c.flags();
    std::vector<int> side(fl.size(), -1);
    std::vector<int> stack;
    for (size_t start = 0; start < fl.size(); start++) {
        if (side[start] >= 0) {
            continue;
        }
        side[start] = 0;
        stack.assign(1, static_cast<int>(start));
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int k = 0; k < 3; k++) {
                int g = fl.involution(k)[f];
                if (side[g] < 0) {
                    side[g] = 1 - side[f];
                    stack.push_back(g);
                } else if (side[g] == side[f]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace detail {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};
}  // namespace detail

/// Polygon with side labels glued pairwise. word[i] = (label, +1|-1) describes
/// side i, running from corner i to corner i+1. Corners are merged by
/// union-find over the gluing.
inline SurfaceComplex glue_polygon(const std::vector<std::pair<int, int>> &word, int genus, bool orientable) {
    int sides = static_cast<int>(word.size());
    detail::UnionFind uf(sides);
    std::map<int, std::pair<int, int>> ends;  // label -> (tail corner, head corner) of first use
    for (int i = 0; i < sides; i++) {
        auto [label, dir] = word[i];
        int from = i;
        int to = (i + 1) % sides;
        int t = dir > 0 ? from : to;
        int h = dir > 0 ? to : from;
        auto it = ends.find(label);
        if (it == ends.end()) {
            ends[label] = {t, h};
        } else {
            uf.unite(it->second.first, t);
            uf.unite(it->second.second, h);
        }
    }
    std::map<int, int> vid;
    for (int i = 0; i < sides; i++) {
        int r = uf.find(i);
        if (!vid.count(r)) {
            int next = static_cast<int>(vid.size());
            vid[r] = next;
        }
    }
    std::vector<int> vertices(vid.size());
    std::iota(vertices.begin(), vertices.end(), 0);
    std::vector<std::pair<int, std::array<int, 2>>> edges;
    for (const auto &[label, te] : ends) {
        edges.push_back({label, {vid[uf.find(te.first)], vid[uf.find(te.second)]}});
    }
    return SurfaceComplex::create(orientable, genus, vertices, edges, {word});
}

/// One-face complex of the fundamental polygon. Orientable: 4g-gon with
/// opposite sides glued (a1 ... a2g a1^-1 ... a2g^-1), which is {4g,4g}.
/// Non-orientable: 2g-gon a1 a1 a2 a2 ... ag ag, which is {2g,2g}.
inline SurfaceComplex fundamental_polygon(int genus, bool orientable) {
    require_hyperbolic_genus("surface", genus, orientable);
    std::vector<std::pair<int, int>> word;
    if (orientable) {
        for (int i = 0; i < 2 * genus; i++) {
            word.push_back({i, 1});
        }
        for (int i = 0; i < 2 * genus; i++) {
            word.push_back({i, -1});
        }
    } else {
        for (int i = 0; i < genus; i++) {
            word.push_back({i, 1});
            word.push_back({i, 1});
        }
    }
    return glue_polygon(word, genus, orientable);
}

struct RegularCounts {
    int64_t faces;
    int64_t edges;
    int64_t vertices;
    friend bool operator==(const RegularCounts &, const RegularCounts &) = default;
};

/// F, E, V of a {p,q} tessellation of a surface with Euler characteristic chi:
/// F = -2 chi q / D, E = -chi p q / D, V = -2 chi p / D with D = pq - 2p - 2q.
/// Empty when any count is not a positive integer.
inline std::optional<RegularCounts> regular_counts_chi(const RegularSig &sig, int chi) {
    int64_t p = sig.p();
    int64_t q = sig.q();
    int64_t d = p * q - 2 * p - 2 * q;
    int64_t fn = -2 * chi * q;
    int64_t en = -chi * p * q;
    int64_t vn = -2 * chi * p;
    if (fn <= 0 || fn % d || en % d || vn % d) {
        return std::nullopt;
    }
    return RegularCounts{fn / d, en / d, vn / d};
}

inline std::optional<RegularCounts> regular_counts(int p, int q, int genus, bool orientable) {
    RegularSig sig(p, q);
    require_hyperbolic_genus("surface", genus, orientable);
    return regular_counts_chi(sig, euler_characteristic(genus, orientable));
}

/// Builds a complex from a flag system: vertices are <s1,s2> orbits, edges
/// <s0,s2> orbits and faces <s0,s1> orbits. Ids are assigned in order of the
/// smallest flag of each orbit.
inline SurfaceComplex complex_from_flags(const FlagSystem &fl, int genus, bool orientable) {
    int nv = 0;
    int ne = 0;
    int nf = 0;
    auto vlabel = fl.orbits(1, 2, &nv);
    auto elabel = fl.orbits(0, 2, &ne);
    auto flabel = fl.orbits(0, 1, &nf);
    // The tail end of each edge is the end holding the smallest flag of its orbit.
    std::vector<int> edge_min(ne, -1);
    for (size_t f = 0; f < fl.size(); f++) {
        if (edge_min[elabel[f]] < 0) {
            edge_min[elabel[f]] = static_cast<int>(f);
        }
    }
    auto at_tail = [&](int f) {
        int m = edge_min[elabel[f]];
        return f == m || f == fl.s2[m];
    };
    std::vector<std::pair<int, std::array<int, 2>>> edges;
    for (int e = 0; e < ne; e++) {
        int m = edge_min[e];
        edges.push_back({e, {vlabel[m], vlabel[fl.s0[m]]}});
    }
    std::vector<std::vector<std::pair<int, int>>> faces(nf);
    std::vector<bool> face_done(nf, false);
    for (size_t start = 0; start < fl.size(); start++) {
        int face = flabel[start];
        if (face_done[face]) {
            continue;
        }
        face_done[face] = true;
        int psi = static_cast<int>(start);
        do {
            faces[face].push_back({elabel[psi], at_tail(psi) ? 1 : -1});
            psi = fl.s1[fl.s0[psi]];
        } while (psi != static_cast<int>(start));
    }
    std::vector<int> vertices(nv);
    std::iota(vertices.begin(), vertices.end(), 0);
    return SurfaceComplex::create(orientable, genus, vertices, edges, faces);
}

/// Dual complex: vertices and faces trade places.
inline SurfaceComplex dual(const SurfaceComplex &c) {
    FlagSystem fl = c.flags();
    std::swap(fl.s0, fl.s2);
    return complex_from_flags(fl, c.genus(), c.orientable());
}

/// Isomorphism of combinatorial maps (a flag bijection commuting with s0, s1, s2).
inline bool is_isomorphic(const SurfaceComplex &a, const SurfaceComplex &b) {
    if (a.orientable() != b.orientable() || a.genus() != b.genus() || a.num_vertices() != b.num_vertices() ||
        a.num_edges() != b.num_edges() || a.num_faces() != b.num_faces() || a.face_census() != b.face_census()) {
        return false;
    }
    const FlagSystem &fa = a.flags();
    const FlagSystem &fb = b.flags();
    size_t n = fa.size();
    std::vector<int> map(n);
    std::vector<int> stack;
    for (size_t target = 0; target < n; target++) {
        std::fill(map.begin(), map.end(), -1);
        std::vector<bool> used(n, false);
        map[0] = static_cast<int>(target);
        used[target] = true;
        stack.assign(1, 0);
        bool ok = true;
        while (ok && !stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int k = 0; k < 3 && ok; k++) {
                int g = fa.involution(k)[f];
                int image = fb.involution(k)[map[f]];
                if (map[g] < 0) {
                    if (used[image]) {
                        ok = false;
                    } else {
                        map[g] = image;
                        used[image] = true;
                        stack.push_back(g);
                    }
                } else if (map[g] != image) {
                    ok = false;
                }
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

}  // namespace hypfloquet
