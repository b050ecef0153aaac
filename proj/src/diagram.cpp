#include "wbs/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace wbs {

std::string vertex_name(const Vertex& v) {
    return (v.bottom ? "b" : "t") + std::to_string(v.col);
}

WalledEdge::WalledEdge(Vertex a, Vertex b, bool m) : u(a), v(b), marked(m) {
    if (v < u) std::swap(u, v);
}

bool KSuperDiagram::is_identity_perm() const {
    for (int t = 1; t <= k; ++t) {
        if (bottom_of[t - 1] != t) return false;
    }
    return true;
}

std::string KSuperDiagram::serialize() const {
    std::string out = "{\"kind\":\"k\",\"k\":" + std::to_string(k) + ",\"edges\":[";
    for (int t = 1; t <= k; ++t) {
        if (t > 1) out += ",";
        out += "{\"top\":" + std::to_string(t) + ",\"bot\":" + std::to_string(bottom_of[t - 1]) +
               ",\"marked\":" + (marked.count(t) ? "true" : "false") + "}";
    }
    out += "]}";
    return out;
}

int WalledDiagram::parity() const { return marked_count() % 2; }

int WalledDiagram::marked_count() const {
    int m = 0;
    for (const auto& e : edges) m += e.marked ? 1 : 0;
    return m;
}

bool WalledDiagram::is_identity() const {
    for (const auto& e : edges) {
        if (e.marked || !e.is_vertical() || e.top_col() != e.bot_col()) return false;
    }
    return true;
}

const WalledEdge& WalledDiagram::edge_at(const Vertex& v) const {
    for (const auto& e : edges) {
        if (e.u == v || e.v == v) return e;
    }
    throw std::invalid_argument("no edge at vertex " + vertex_name(v));
}

std::string WalledDiagram::serialize() const {
    std::string out = "{\"kind\":\"walled\",\"r\":" + std::to_string(r) +
                      ",\"s\":" + std::to_string(s) + ",\"edges\":[";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i > 0) out += ",";
        out += "{\"u\":\"" + vertex_name(edges[i].u) + "\",\"v\":\"" + vertex_name(edges[i].v) +
               "\",\"marked\":" + (edges[i].marked ? "true" : "false") + "}";
    }
    out += "]}";
    return out;
}

KSuperDiagram new_k_diagram(int k, std::vector<int> bottom_of, std::set<int> marked) {
    if (k < 1) throw std::invalid_argument("k-superdiagram needs k >= 1");
    if (static_cast<int>(bottom_of.size()) != k) {
        throw std::invalid_argument("bottom_of must list exactly k vertices");
    }
    std::vector<char> seen(k + 1, 0);
    for (int b : bottom_of) {
        if (b < 1 || b > k) {
            throw std::invalid_argument("bottom vertex " + std::to_string(b) + " out of range");
        }
        if (seen[b]) {
            throw std::invalid_argument("not a permutation: bottom vertex " + std::to_string(b) +
                                        " used twice");
        }
        seen[b] = 1;
    }
    for (int t : marked) {
        if (t < 1 || t > k) {
            throw std::invalid_argument("mark index " + std::to_string(t) + " out of range");
        }
    }
    return KSuperDiagram{k, std::move(bottom_of), std::move(marked)};
}

WalledDiagram new_walled(int r, int s, std::vector<WalledEdge> edges) {
    if (r < 0 || s < 0 || r + s <= 0) throw std::invalid_argument("need r, s >= 0 and r+s > 0");
    const int m = r + s;
    if (static_cast<int>(edges.size()) != m) {
        throw std::invalid_argument("expected " + std::to_string(m) + " edges, got " +
                                    std::to_string(edges.size()));
    }
    std::vector<char> degree(2 * m + 2, 0);
    auto slot = [&](const Vertex& v) -> char& {
        if (v.col < 1 || v.col > m) {
            throw std::invalid_argument("vertex " + vertex_name(v) + " out of range");
        }
        return degree[(v.bottom ? m : 0) + v.col];
    };
    for (const auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("degenerate edge at " + vertex_name(e.u));
        if (++slot(e.u) > 1 || ++slot(e.v) > 1) {
            throw std::invalid_argument("vertex degree exceeds 1 in edge " + vertex_name(e.u) +
                                        "-" + vertex_name(e.v));
        }
        bool u_left = e.u.col <= r;
        bool v_left = e.v.col <= r;
        if (e.is_vertical()) {
            if (u_left != v_left) {
                throw std::invalid_argument("vertical edge " + vertex_name(e.u) + "-" +
                                            vertex_name(e.v) + " crosses the wall");
            }
        } else if (u_left == v_left) {
            throw std::invalid_argument("horizontal edge " + vertex_name(e.u) + "-" +
                                        vertex_name(e.v) + " does not cross the wall");
        }
    }
    std::sort(edges.begin(), edges.end());
    return WalledDiagram{r, s, std::move(edges)};
}

WalledDiagram new_walled(int r, int s, const std::vector<std::pair<Vertex, Vertex>>& edges,
                         const std::set<std::pair<Vertex, Vertex>>& marked) {
    std::vector<WalledEdge> built;
    built.reserve(edges.size());
    auto canonical = [](std::pair<Vertex, Vertex> p) {
        if (p.second < p.first) std::swap(p.first, p.second);
        return p;
    };
    std::set<std::pair<Vertex, Vertex>> canon_marks;
    for (const auto& mk : marked) canon_marks.insert(canonical(mk));
    for (const auto& [a, b] : edges) {
        auto key = canonical({a, b});
        bool m = canon_marks.erase(key) > 0;
        built.emplace_back(a, b, m);
    }
    if (!canon_marks.empty()) {
        auto& stray = *canon_marks.begin();
        throw std::invalid_argument("mark refers to a missing edge " + vertex_name(stray.first) +
                                    "-" + vertex_name(stray.second));
    }
    return new_walled(r, s, std::move(built));
}

std::vector<KSuperDiagram> enumerate_k(int k, int guard) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k > guard) {
        throw std::invalid_argument("enumerate_k guard exceeded: k = " + std::to_string(k));
    }
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i + 1;
    std::vector<KSuperDiagram> out;
    do {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::set<int> marked;
            for (int t = 1; t <= k; ++t) {
                if (mask & (1u << (t - 1))) marked.insert(t);
            }
            out.push_back(KSuperDiagram{k, perm, std::move(marked)});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end(),
              [](const KSuperDiagram& a, const KSuperDiagram& b) { return a < b; });
    return out;
}

namespace {

void all_wall_matchings(int r, int m, std::vector<Vertex>& order, std::vector<char>& used,
                        std::vector<std::pair<Vertex, Vertex>>& current,
                        std::vector<std::vector<std::pair<Vertex, Vertex>>>& out) {
    std::size_t first = 0;
    while (first < order.size() && used[first]) ++first;
    if (first == order.size()) {
        out.push_back(current);
        return;
    }
    used[first] = 1;
    const Vertex u = order[first];
    for (std::size_t j = first + 1; j < order.size(); ++j) {
        if (used[j]) continue;
        const Vertex v = order[j];
        bool vertical = u.bottom != v.bottom;
        bool u_left = u.col <= r;
        bool v_left = v.col <= r;
        if (vertical ? (u_left != v_left) : (u_left == v_left)) continue;
        used[j] = 1;
        current.emplace_back(u, v);
        all_wall_matchings(r, m, order, used, current, out);
        current.pop_back();
        used[j] = 0;
    }
    used[first] = 0;
}

}  // namespace

std::vector<WalledDiagram> enumerate_walled(int r, int s, int guard) {
    if (r < 0 || s < 0 || r + s <= 0) throw std::invalid_argument("need r, s >= 0 and r+s > 0");
    const int m = r + s;
    if (m > guard) {
        throw std::invalid_argument("enumerate_walled guard exceeded: r+s = " + std::to_string(m));
    }
    std::vector<Vertex> order;
    for (int c = 1; c <= m; ++c) order.push_back(top_vertex(c));
    for (int c = 1; c <= m; ++c) order.push_back(bot_vertex(c));
    std::vector<char> used(order.size(), 0);
    std::vector<std::pair<Vertex, Vertex>> current;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> matchings;
    all_wall_matchings(r, m, order, used, current, matchings);

    std::vector<WalledDiagram> out;
    out.reserve(matchings.size() << m);
    for (const auto& matching : matchings) {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<WalledEdge> edges;
            edges.reserve(m);
            for (int i = 0; i < m; ++i) {
                edges.emplace_back(matching[i].first, matching[i].second,
                                   (mask & (1u << i)) != 0);
            }
            out.push_back(new_walled(r, s, std::move(edges)));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const WalledDiagram& a, const WalledDiagram& b) { return a < b; });
    return out;
}

WalledDiagram identity_walled(int r, int s) {
    std::vector<WalledEdge> edges;
    for (int c = 1; c <= r + s; ++c) edges.emplace_back(top_vertex(c), bot_vertex(c), false);
    return new_walled(r, s, std::move(edges));
}

KSuperDiagram identity_k(int k) {
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i + 1;
    return new_k_diagram(k, std::move(perm), {});
}

WalledDiagram permutation_walled(int r, int s, const std::vector<int>& sigma) {
    const int m = r + s;
    if (static_cast<int>(sigma.size()) != m) {
        throw std::invalid_argument("permutation must have length r+s");
    }
    std::vector<WalledEdge> edges;
    for (int t = 1; t <= m; ++t) {
        int b = sigma[t - 1];
        if ((t <= r) != (b <= r)) {
            throw std::invalid_argument("permutation does not preserve the wall at " +
                                        std::to_string(t));
        }
        edges.emplace_back(top_vertex(t), bot_vertex(b), false);
    }
    return new_walled(r, s, std::move(edges));
}

WalledDiagram generator(int r, int s, const GenName& name) {
    const int m = r + s;
    switch (name.kind) {
        case GenKind::S: {
            int i = name.index;
            if (i < 1 || i >= m || i == r) {
                throw std::invalid_argument("s_" + std::to_string(i) +
                                            " is inadmissible (crosses the wall or out of range)");
            }
            std::vector<int> sigma(m);
            for (int t = 1; t <= m; ++t) sigma[t - 1] = t;
            std::swap(sigma[i - 1], sigma[i]);
            return permutation_walled(r, s, sigma);
        }
        case GenKind::E: {
            if (r < 1 || s < 1) {
                throw std::invalid_argument("e_{r,r+1} undefined when r = 0 or s = 0");
            }
            std::vector<WalledEdge> edges;
            edges.emplace_back(top_vertex(r), top_vertex(r + 1), false);
            edges.emplace_back(bot_vertex(r), bot_vertex(r + 1), false);
            for (int c = 1; c <= m; ++c) {
                if (c == r || c == r + 1) continue;
                edges.emplace_back(top_vertex(c), bot_vertex(c), false);
            }
            return new_walled(r, s, std::move(edges));
        }
        case GenKind::C: {
            int i = name.index;
            if (i < 1 || i > m) {
                throw std::invalid_argument("c_" + std::to_string(i) + " index out of range");
            }
            std::vector<WalledEdge> edges;
            for (int c = 1; c <= m; ++c) {
                edges.emplace_back(top_vertex(c), bot_vertex(c), c == i);
            }
            return new_walled(r, s, std::move(edges));
        }
    }
    throw std::invalid_argument("unknown generator");
}

WalledDiagram flip(const KSuperDiagram& d, int r, int s) {
    if (d.k != r + s) throw std::invalid_argument("flip needs r + s = k");
    auto map_top = [&](int t) { return t <= r ? top_vertex(t) : bot_vertex(t); };
    auto map_bot = [&](int b) { return b <= r ? bot_vertex(b) : top_vertex(b); };
    std::vector<WalledEdge> edges;
    edges.reserve(d.k);
    for (int t = 1; t <= d.k; ++t) {
        edges.emplace_back(map_top(t), map_bot(d.bottom_of[t - 1]), d.marked.count(t) > 0);
    }
    return new_walled(r, s, std::move(edges));
}

bool edges_cross(const WalledEdge& a, const WalledEdge& b) {
    if (a.is_vertical() && b.is_vertical()) {
        return (a.top_col() - b.top_col()) * (a.bot_col() - b.bot_col()) < 0;
    }
    if (a.is_vertical() || b.is_vertical()) {
        const WalledEdge& vert = a.is_vertical() ? a : b;
        const WalledEdge& horiz = a.is_vertical() ? b : a;
        int anchor = horiz.is_top_horizontal() ? vert.top_col() : vert.bot_col();
        return horiz.left_col() < anchor && anchor < horiz.right_col();
    }
    if (a.is_top_horizontal() != b.is_top_horizontal()) return false;
    // Arcs in the same row cross exactly when they interleave.
    return (a.left_col() < b.left_col() && b.left_col() < a.right_col() &&
            a.right_col() < b.right_col()) ||
           (b.left_col() < a.left_col() && a.left_col() < b.right_col() &&
            b.right_col() < a.right_col());
}

std::vector<std::pair<int, int>> k_crossings(const KSuperDiagram& d) {
    std::vector<std::pair<int, int>> out;
    for (int t1 = 1; t1 <= d.k; ++t1) {
        for (int t2 = t1 + 1; t2 <= d.k; ++t2) {
            if (d.bottom_of[t1 - 1] > d.bottom_of[t2 - 1]) out.emplace_back(t1, t2);
        }
    }
    return out;
}

}  // namespace wbs
