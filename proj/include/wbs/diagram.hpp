#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace wbs {

// Vertex of a walled diagram: row (top or bottom) and 1-based column.
struct Vertex {
    bool bottom = false;
    int col = 0;

    // Canonical order: all top vertices before all bottom ones, then by index.
    auto operator<=>(const Vertex&) const = default;
};

inline Vertex top_vertex(int col) { return {false, col}; }
inline Vertex bot_vertex(int col) { return {true, col}; }

std::string vertex_name(const Vertex& v);

// Unordered endpoint pair in canonical order (u < v), plus the mark.
struct WalledEdge {
    Vertex u;
    Vertex v;
    bool marked = false;

    WalledEdge() = default;
    WalledEdge(Vertex a, Vertex b, bool m);

    bool is_vertical() const { return u.bottom != v.bottom; }
    bool is_top_horizontal() const { return !u.bottom && !v.bottom; }
    bool is_bottom_horizontal() const { return u.bottom && v.bottom; }

    // For verticals. Canonical order puts the top endpoint first.
    int top_col() const { return u.col; }
    int bot_col() const { return v.col; }
    // For horizontals.
    int left_col() const { return u.col < v.col ? u.col : v.col; }
    int right_col() const { return u.col < v.col ? v.col : u.col; }

    auto operator<=>(const WalledEdge&) const = default;
};

// Basis element of the diagrammatic Sergeev algebra: a permutation of
// {1..k} with a set of marked edges, each identified by its top vertex.
struct KSuperDiagram {
    int k = 0;
    std::vector<int> bottom_of;  // bottom_of[t-1] = bottom vertex under top t
    std::set<int> marked;        // top vertices of marked edges

    int parity() const { return static_cast<int>(marked.size()) % 2; }
    bool is_identity_perm() const;

    std::string serialize() const;
    bool operator==(const KSuperDiagram& other) const = default;
    bool operator<(const KSuperDiagram& other) const { return serialize() < other.serialize(); }
};

// Basis element of the walled Brauer superalgebra: a perfect matching on the
// 2(r+s) vertices in which verticals stay on one side of the wall and
// horizontals cross it, with a set of marked edges.
struct WalledDiagram {
    int r = 0;
    int s = 0;
    std::vector<WalledEdge> edges;  // sorted by canonical edge order

    int size() const { return r + s; }
    int parity() const;
    int marked_count() const;
    bool is_identity() const;

    const WalledEdge& edge_at(const Vertex& v) const;

    std::string serialize() const;
    bool operator==(const WalledDiagram& other) const = default;
    bool operator<(const WalledDiagram& other) const { return serialize() < other.serialize(); }
};

// Validating constructors. Both throw std::invalid_argument with a message
// naming the offending vertex or mark.
KSuperDiagram new_k_diagram(int k, std::vector<int> bottom_of, std::set<int> marked);
WalledDiagram new_walled(int r, int s, const std::vector<std::pair<Vertex, Vertex>>& edges,
                         const std::set<std::pair<Vertex, Vertex>>& marked);
WalledDiagram new_walled(int r, int s, std::vector<WalledEdge> edges);

// Enumeration guard; raise with care (sizes grow as 2^m m!).
inline constexpr int kEnumerationGuard = 6;

std::vector<KSuperDiagram> enumerate_k(int k, int guard = kEnumerationGuard);
std::vector<WalledDiagram> enumerate_walled(int r, int s, int guard = kEnumerationGuard);

// Named generator diagrams of B_{r,s}.
enum class GenKind { S, E, C };
struct GenName {
    GenKind kind;
    int index = 0;  // s_i and c_i carry an index; e means e_{r,r+1}
};

WalledDiagram generator(int r, int s, const GenName& name);
WalledDiagram identity_walled(int r, int s);
KSuperDiagram identity_k(int k);

// Permutation diagram of sigma in Sigma_r x Sigma_s (top t joins bottom
// sigma(t); sigma must preserve sides).
WalledDiagram permutation_walled(int r, int s, const std::vector<int>& sigma);

// The mark-preserving bijection D_{r+s} -> B_{r,s}: columns right of the wall
// swap their top and bottom vertices, edges follow along.
WalledDiagram flip(const KSuperDiagram& d, int r, int s);

// Crossing count helpers used by weights and signs. Two edges cross when the
// usual picture (straight verticals, shallow arcs) forces an intersection.
bool edges_cross(const WalledEdge& a, const WalledEdge& b);
std::vector<std::pair<int, int>> k_crossings(const KSuperDiagram& d);

}  // namespace wbs
