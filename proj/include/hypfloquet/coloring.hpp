#pragma once

// Face 3-colorings of trivalent even-faced complexes and the colored two-body
// checks they induce.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypfloquet/error.hpp"
#include "hypfloquet/pauli.hpp"
#include "hypfloquet/surface.hpp"

namespace hypfloquet {

enum class Color : int { R = 0, G = 1, B = 2 };

inline char color_char(Color c) {
    return "RGB"[static_cast<int>(c)];
}

/// Check type bound to each edge color: green XX, blue YY, red ZZ.
inline char check_pauli(Color c) {
    switch (c) {
        case Color::G:
            return 'X';
        case Color::B:
            return 'Y';
        case Color::R:
            return 'Z';
    }
    return '?';
}

/// Stabilizer type of a face of the given color: green X, blue Y, red Z.
inline char face_pauli(Color c) {
    return check_pauli(c);
}

/// Color measured in round r: r mod 3 = 0 green, 1 blue, 2 red.
inline Color round_color(int r) {
    static constexpr std::array<Color, 3> order = {Color::G, Color::B, Color::R};
    return order[((r % 3) + 3) % 3];
}

struct Check {
    Color color;
    char pauli;  // 'X', 'Y' or 'Z' (the check is pauli x pauli)
    int edge;
    std::array<int, 2> qubits;  // vertex indices
};

struct TilingDiagnostics {
    bool ok = false;
    std::string reason;  // empty when ok
};

struct ColorAssignment {
    std::vector<Color> face_color;
    std::vector<Color> edge_color;
    std::vector<Check> checks;  // one per edge, in edge order
    int num_qubits = 0;

    std::vector<Check> checks_of(Color c) const {
        std::vector<Check> out;
        for (const auto &ch : checks) {
            if (ch.color == c) {
                out.push_back(ch);
            }
        }
        return out;
    }
};

namespace detail {

// Face-adjacency lists (with multiplicity removed). A face glued to itself
// along an edge is reported through `self_adjacent`.
inline std::vector<std::vector<int>> face_adjacency(const SurfaceComplex &c, int *self_adjacent) {
    std::vector<std::vector<int>> adj(c.num_faces());
    *self_adjacent = -1;
    for (const auto &[a, b] : c.edge_faces()) {
        if (a == b) {
            if (*self_adjacent < 0) {
                *self_adjacent = a;
            }
            continue;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto &list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

// Backtracking over faces in index order, colors tried R < G < B, with forward
// checking on the remaining domains.
inline std::optional<std::vector<Color>> color_faces(const std::vector<std::vector<int>> &adj) {
    size_t n = adj.size();
    std::vector<int> color(n, -1);
    std::vector<std::array<int, 3>> blocked(n, {0, 0, 0});
    auto assign = [&](size_t f, int c, int delta) {
        for (int g : adj[f]) {
            blocked[g][c] += delta;
        }
    };
    std::vector<int> tried(n, -1);
    size_t f = 0;
    while (f < n) {
        if (color[f] >= 0) {
            assign(f, color[f], -1);
            color[f] = -1;
        }
        int c = tried[f] + 1;
        bool placed = false;
        for (; c < 3; c++) {
            if (blocked[f][c]) {
                continue;
            }
            assign(f, c, +1);
            bool dead = false;
            for (int g : adj[f]) {
                if (color[g] < 0 && blocked[g][0] && blocked[g][1] && blocked[g][2]) {
                    dead = true;
                    break;
                }
            }
            if (dead) {
                assign(f, c, -1);
                continue;
            }
            color[f] = c;
            tried[f] = c;
            placed = true;
            break;
        }
        if (placed) {
            f++;
        } else {
            tried[f] = -1;
            if (f == 0) {
                return std::nullopt;
            }
            f--;
        }
    }
    std::vector<Color> out(n);
    for (size_t i = 0; i < n; i++) {
        out[i] = static_cast<Color>(color[i]);
    }
    return out;
}

}  // namespace detail

/// True iff every vertex has degree 3, every face has even length and the
/// face-adjacency graph has a proper 3-coloring. The reason names the first
/// violated condition.
inline TilingDiagnostics is_color_code_tiling(const SurfaceComplex &c) {
    auto deg = c.vertex_degrees();
    for (size_t v = 0; v < deg.size(); v++) {
        if (deg[v] != 3) {
            return {false, "vertex " + std::to_string(c.vertex_ids()[v]) + " has degree " + std::to_string(deg[v]) +
                               " (not trivalent)"};
        }
    }
    for (int f = 0; f < c.num_faces(); f++) {
        if (c.faces()[f].size() % 2 != 0) {
            return {false, "face " + std::to_string(f) + " has odd length " + std::to_string(c.faces()[f].size())};
        }
    }
    int self = -1;
    auto adj = detail::face_adjacency(c, &self);
    if (self >= 0) {
        return {false, "face " + std::to_string(self) + " is adjacent to itself"};
    }
    if (!detail::color_faces(adj)) {
        return {false, "face adjacency graph is not 3-colorable"};
    }
    return {true, ""};
}

/// Deterministic proper face 3-coloring with the induced edge colors and checks.
/// Each edge takes the color absent from its two faces.
inline ColorAssignment three_color(const SurfaceComplex &c) {
    auto diag = is_color_code_tiling(c);
    if (!diag.ok) {
        throw DomainError("coloring", "not a color-code tiling: " + diag.reason);
    }
    int self = -1;
    auto adj = detail::face_adjacency(c, &self);
    ColorAssignment out;
    out.face_color = *detail::color_faces(adj);
    out.num_qubits = c.num_vertices();
    auto ef = c.edge_faces();
    for (int e = 0; e < c.num_edges(); e++) {
        int a = static_cast<int>(out.face_color[ef[e][0]]);
        int b = static_cast<int>(out.face_color[ef[e][1]]);
        Color col = static_cast<Color>(3 - a - b);
        out.edge_color.push_back(col);
        out.checks.push_back({col, check_pauli(col), e, c.edges()[e].ends});
    }
    return out;
}

/// Checks measured in round r.
inline std::vector<Check> checks_for_round(const ColorAssignment &assign, int r) {
    return assign.checks_of(round_color(r));
}

inline PauliOperator check_operator(const ColorAssignment &assign, const Check &ch) {
    return PauliOperator::two_body(assign.num_qubits, ch.pauli, ch.qubits[0], ch.qubits[1]);
}

/// Face cycle operator: the product of the face's boundary checks. A face of
/// color c comes out as a pure face_pauli(c) operator on its vertices.
inline PauliOperator face_stabilizer(const SurfaceComplex &c, const ColorAssignment &assign, int face) {
    PauliOperator p(assign.num_qubits);
    for (const auto &s : c.faces()[face]) {
        p *= check_operator(assign, assign.checks[s.edge]);
    }
    return p;
}

/// [{"color": "G", "pauli": "XX", "qubits": [u, v]}, ...] with vertex ids.
inline nlohmann::json checks_to_json(const SurfaceComplex &c, const ColorAssignment &assign) {
    auto out = nlohmann::json::array();
    for (const auto &ch : assign.checks) {
        out.push_back({{"color", std::string(1, color_char(ch.color))},
                       {"pauli", std::string(2, ch.pauli)},
                       {"qubits", {c.vertex_ids()[ch.qubits[0]], c.vertex_ids()[ch.qubits[1]]}}});
    }
    return out;
}

}  // namespace hypfloquet
