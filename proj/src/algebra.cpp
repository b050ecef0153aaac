#include "wbs/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace wbs {

template <>
void Element<KSuperDiagram, KAmbient>::require_same_ambient(const KElement& other) const {
    if (!(ambient_ == other.ambient())) {
        throw std::invalid_argument("ambient mismatch: k = " + std::to_string(ambient_.k) +
                                    " vs " + std::to_string(other.ambient().k));
    }
}

template <>
void Element<WalledDiagram, WalledAmbient>::require_same_ambient(const WalledElement& other) const {
    if (!(ambient_ == other.ambient())) {
        throw std::invalid_argument("ambient mismatch in walled elements");
    }
}

KElement k_element_of(const KSuperDiagram& d, const Int& coeff) {
    KElement out(KAmbient{d.k});
    out.add_term(d, coeff);
    return out;
}

WalledElement walled_element_of(const WalledDiagram& d, const Int& coeff) {
    WalledElement out(WalledAmbient{d.r, d.s});
    out.add_term(d, coeff);
    return out;
}

bool operator==(const NormalWord& a, const NormalWord& b) {
    return a.sigma == b.sigma && a.clifford == b.clifford && a.sign == b.sign;
}

std::vector<int> compose_perms(const std::vector<int>& outer, const std::vector<int>& inner) {
    if (outer.size() != inner.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> out(inner.size());
    for (std::size_t t = 0; t < inner.size(); ++t) out[t] = outer[inner[t] - 1];
    return out;
}

std::vector<int> invert_perm(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t t = 0; t < perm.size(); ++t) inv[perm[t] - 1] = static_cast<int>(t) + 1;
    return inv;
}

int arranging_number(const std::vector<int>& seq) {
    // Stable relabeling: the i occurrences of the smallest value become
    // 1..i left to right, the next value continues the count, and so on.
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> relabeled(seq.size());
    std::vector<char> consumed(seq.size(), 0);
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
        for (std::size_t slot = 0; slot < sorted.size(); ++slot) {
            if (!consumed[slot] && sorted[slot] == seq[pos]) {
                relabeled[pos] = static_cast<int>(slot) + 1;
                consumed[slot] = 1;
                break;
            }
        }
    }
    int inversions = 0;
    for (std::size_t i = 0; i < relabeled.size(); ++i) {
        for (std::size_t j = i + 1; j < relabeled.size(); ++j) {
            if (relabeled[i] > relabeled[j]) ++inversions;
        }
    }
    return inversions;
}

std::pair<KElement, SergeevSignReport> sergeev_mul(const KSuperDiagram& d1,
                                                   const KSuperDiagram& d2) {
    if (d1.k != d2.k) throw std::invalid_argument("sergeev_mul: k mismatch");
    const int k = d1.k;
    std::vector<int> inv2 = invert_perm(d2.bottom_of);

    // Composite permutation and marks: top t of d2 runs through the middle
    // vertex d2(t) into the edge of d1 below it.
    std::vector<int> comp(k);
    std::set<int> marks;
    SergeevSignReport report;
    for (int t = 1; t <= k; ++t) {
        int mid = d2.bottom_of[t - 1];
        comp[t - 1] = d1.bottom_of[mid - 1];
        bool m1 = d1.marked.count(mid) > 0;
        bool m2 = d2.marked.count(t) > 0;
        if (m1 && m2) ++report.rho;
        if (m1 != m2) marks.insert(t);
    }

    std::vector<int> seq;
    for (int i : d1.marked) seq.push_back(inv2[i - 1]);
    for (int j : d2.marked) seq.push_back(j);
    report.ell = arranging_number(seq);

    Int coeff = ((report.rho + report.ell) % 2 == 0) ? 1 : -1;
    return {k_element_of(new_k_diagram(k, std::move(comp), std::move(marks)), coeff), report};
}

NormalWord phi_k(const KSuperDiagram& d) {
    NormalWord w;
    w.sigma = d.bottom_of;
    w.clifford.assign(d.marked.begin(), d.marked.end());
    w.sign = 1;
    return w;
}

KSuperDiagram phi_k_inv(const NormalWord& w) {
    return new_k_diagram(static_cast<int>(w.sigma.size()), w.sigma,
                         std::set<int>(w.clifford.begin(), w.clifford.end()));
}

namespace {

void require_increasing(const std::vector<int>& clifford) {
    for (std::size_t i = 1; i < clifford.size(); ++i) {
        if (clifford[i - 1] >= clifford[i]) {
            throw std::invalid_argument("clifford word must be strictly increasing");
        }
    }
}

}  // namespace

NormalWord normal_mul(const NormalWord& w1, const NormalWord& w2) {
    if (w1.sigma.size() != w2.sigma.size()) throw std::invalid_argument("normal_mul: k mismatch");
    require_increasing(w1.clifford);
    require_increasing(w2.clifford);

    NormalWord out;
    out.sigma = compose_perms(w1.sigma, w2.sigma);

    // c_{tau^{-1}(i_1)} ... c_{tau^{-1}(i_p)} c_{j_1} ... c_{j_q}, then sort
    // with c_a c_b = -c_b c_a and collapse c_a c_a = -1.
    std::vector<int> inv2 = invert_perm(w2.sigma);
    std::vector<int> word;
    for (int i : w1.clifford) word.push_back(inv2[i - 1]);
    for (int j : w2.clifford) word.push_back(j);

    int flips = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        for (std::size_t j = i + 1; j < word.size(); ++j) {
            if (word[i] > word[j]) ++flips;
        }
    }
    std::stable_sort(word.begin(), word.end());
    int squarings = 0;
    std::vector<int> reduced;
    for (std::size_t i = 0; i < word.size();) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        std::size_t run = j - i;
        squarings += static_cast<int>(run / 2);
        if (run % 2 == 1) reduced.push_back(word[i]);
        i = j;
    }
    out.clifford = std::move(reduced);
    out.sign = w1.sign * w2.sign * (((flips + squarings) % 2 == 0) ? 1 : -1);
    return out;
}

// ---------------------------------------------------------------------------
// Walled multiplication: marked concatenation with the good-vertex coloring.

namespace {

// A constituent edge in the stacked picture, tagged with the diagram it came
// from (0 = lower d1, 1 = upper d2).
struct Constituent {
    int diagram;
    const WalledEdge* edge;
};

// Nodes of the stacked picture.
enum class Level { Bottom, Middle, Top };

struct Node {
    Level level;
    int col;
    bool operator==(const Node&) const = default;
};

Node lower_node(const Vertex& v) {
    return {v.bottom ? Level::Bottom : Level::Middle, v.col};
}
Node upper_node(const Vertex& v) {
    return {v.bottom ? Level::Middle : Level::Top, v.col};
}

struct ChainInfo {
    std::vector<Constituent> elems;  // ordered from the good-vertex end
    Node start;                      // good-vertex end
    Node end;
    bool marked = false;
};

}  // namespace

std::pair<WalledElement, WalledSignReport> walled_mul(const WalledDiagram& d1,
                                                      const WalledDiagram& d2) {
    if (d1.r != d2.r || d1.s != d2.s) throw std::invalid_argument("walled_mul: shape mismatch");
    const int r = d1.r;
    const int m = d1.size();
    WalledSignReport report;
    WalledElement zero{WalledAmbient{d1.r, d1.s}};

    // Constituents carry an id: 0..m-1 in d1, m..2m-1 in d2. Middle vertex c
    // joins the d1 edge at its top row with the d2 edge at its bottom row.
    auto edge_of = [&](int id) -> const WalledEdge& {
        return id < m ? d1.edges[id] : d2.edges[id - m];
    };
    auto diagram_of = [&](int id) { return id < m ? 0 : 1; };
    std::vector<int> mid_lower(m + 1, -1);
    std::vector<int> mid_upper(m + 1, -1);
    for (int id = 0; id < m; ++id) {
        const auto& e = d1.edges[id];
        if (!e.u.bottom) mid_lower[e.u.col] = id;
        if (!e.v.bottom) mid_lower[e.v.col] = id;
    }
    for (int id = 0; id < m; ++id) {
        const auto& e = d2.edges[id];
        if (e.u.bottom) mid_upper[e.u.col] = m + id;
        if (e.v.bottom) mid_upper[e.v.col] = m + id;
    }

    auto other_end = [&](int id, Node at) {
        const auto& e = edge_of(id);
        Node a = diagram_of(id) == 0 ? lower_node(e.u) : upper_node(e.u);
        Node b = diagram_of(id) == 0 ? lower_node(e.v) : upper_node(e.v);
        return a == at ? b : a;
    };

    // Walk the paths from every boundary vertex; untouched middle edges are
    // loops.
    std::vector<ChainInfo> chains;
    std::vector<char> visited(2 * m, 0);
    int visit_count = 0;
    auto walk = [&](Node start, int first) {
        ChainInfo chain;
        chain.start = start;
        Node at = start;
        int id = first;
        int mark_count = 0;
        while (true) {
            visited[id] = 1;
            ++visit_count;
            chain.elems.push_back({diagram_of(id), &edge_of(id)});
            mark_count += edge_of(id).marked ? 1 : 0;
            Node next = other_end(id, at);
            if (next.level != Level::Middle) {
                chain.end = next;
                break;
            }
            at = next;
            id = diagram_of(id) == 0 ? mid_upper[next.col] : mid_lower[next.col];
        }
        chain.marked = mark_count % 2 == 1;
        chains.push_back(std::move(chain));
    };
    for (int id = 0; id < 2 * m; ++id) {
        if (visited[id]) continue;
        const auto& e = edge_of(id);
        if (diagram_of(id) == 0) {
            if (e.u.bottom) {
                walk({Level::Bottom, e.u.col}, id);
            } else if (e.v.bottom) {
                walk({Level::Bottom, e.v.col}, id);
            }
        } else {
            if (!e.u.bottom) {
                walk({Level::Top, e.u.col}, id);
            } else if (!e.v.bottom) {
                walk({Level::Top, e.v.col}, id);
            }
        }
    }
    if (visit_count != 2 * m) {
        report.loop_detected = true;
        return {zero, report};
    }

    // Composite edges, each oriented so that elems[0] touches the good
    // vertex: the top vertex of a vertical, the left vertex of a horizontal.
    std::vector<WalledEdge> product_edges;
    for (auto& chain : chains) {
        Node a = chain.start;
        Node b = chain.end;
        Vertex va = a.level == Level::Top ? top_vertex(a.col) : bot_vertex(a.col);
        Vertex vb = b.level == Level::Top ? top_vertex(b.col) : bot_vertex(b.col);
        product_edges.emplace_back(va, vb, chain.marked);

        bool good_at_start;
        if (a.level != b.level) {
            good_at_start = a.level == Level::Top;  // vertical: top vertex
        } else {
            good_at_start = a.col < b.col;  // horizontal: left vertex
        }
        if (!good_at_start) {
            std::reverse(chain.elems.begin(), chain.elems.end());
            std::swap(chain.start, chain.end);
        }
    }
    WalledDiagram product = new_walled(d1.r, d1.s, std::move(product_edges));

    // Good-vertex coloring of the marked constituent edges. Reading order is
    // d1 then d2, bottom row before top row, left to right.
    struct Marker {
        int chain = 0;
        int pos = 0;       // distance from the good end along the chain
        int value = 0;     // column of the composite edge's good vertex
        bool square = false;
    };
    std::vector<std::pair<std::tuple<int, int, int>, Marker>> keyed;
    for (std::size_t ci = 0; ci < chains.size(); ++ci) {
        const auto& chain = chains[ci];
        bool square = chain.start.level == Level::Bottom && chain.end.level == Level::Bottom;
        for (std::size_t pos = 0; pos < chain.elems.size(); ++pos) {
            const auto& [diagram, edge] = chain.elems[pos];
            if (!edge->marked) continue;
            Vertex good = edge->is_vertical() ? edge->u
                          : (edge->u.col < edge->v.col ? edge->u : edge->v);
            int row_rank = good.bottom ? 0 : 1;
            Marker marker{static_cast<int>(ci), static_cast<int>(pos), chain.start.col, square};
            keyed.emplace_back(std::make_tuple(diagram, row_rank, good.col), marker);
        }
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Marker> circles;
    std::vector<Marker> squares;
    std::vector<int> number_of;  // color number per keyed position
    int squares_after = 0;
    // c(d1,d2): for each circle, the number of squares with a larger number.
    for (auto it = keyed.rbegin(); it != keyed.rend(); ++it) {
        if (it->second.square) {
            ++squares_after;
        } else {
            report.c += squares_after;
        }
    }
    for (const auto& [key, marker] : keyed) {
        (marker.square ? squares : circles).push_back(marker);
    }

    auto arranging_and_pairs = [&](const std::vector<Marker>& markers, int& ell, int& rho) {
        std::vector<int> values;
        values.reserve(markers.size());
        std::map<int, int> multiplicity;
        for (const auto& mk : markers) {
            values.push_back(mk.value);
            ++multiplicity[mk.value];
        }
        ell = arranging_number(values);
        rho = 0;
        for (const auto& [v, count] : multiplicity) {
            if (v <= r) rho += count / 2;
        }
    };
    arranging_and_pairs(circles, report.ell1, report.rho1);
    arranging_and_pairs(squares, report.ell2, report.rho2);

    // Passing numbers: a later circle passes an earlier one sitting strictly
    // nearer the good end of the same chain; squares pass later-numbered ones.
    for (std::size_t i = 0; i < circles.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (circles[i].chain == circles[j].chain && circles[j].pos < circles[i].pos) {
                ++report.p1;
            }
        }
    }
    for (std::size_t i = 0; i < squares.size(); ++i) {
        for (std::size_t j = i + 1; j < squares.size(); ++j) {
            if (squares[i].chain == squares[j].chain && squares[j].pos < squares[i].pos) {
                ++report.p2;
            }
        }
    }

    Int coeff = (report.exponent() % 2 == 0) ? 1 : -1;
    return {walled_element_of(product, coeff), report};
}

KElement elem_mul(const KElement& x, const KElement& y) {
    x.require_same_ambient(y);
    KElement out(x.ambient());
    for (const auto& [dx, cx] : x.terms()) {
        for (const auto& [dy, cy] : y.terms()) {
            auto [prod, report] = sergeev_mul(dx, dy);
            out += prod.scaled(cx * cy);
        }
    }
    return out;
}

WalledElement elem_mul(const WalledElement& x, const WalledElement& y) {
    x.require_same_ambient(y);
    WalledElement out(x.ambient());
    for (const auto& [dx, cx] : x.terms()) {
        for (const auto& [dy, cy] : y.terms()) {
            auto [prod, report] = walled_mul(dx, dy);
            out += prod.scaled(cx * cy);
        }
    }
    return out;
}

std::pair<WalledDiagram, int> signed_flip(const KSuperDiagram& d, int r, int s) {
    WalledDiagram flipped = flip(d, r, s);
    int vertical_left = 0, horizontal_top = 0, horizontal_bottom = 0;
    for (const auto& e : flipped.edges) {
        if (!e.marked) continue;
        if (e.is_vertical() && e.top_col() <= r) ++vertical_left;
        if (e.is_top_horizontal()) ++horizontal_top;
        if (e.is_bottom_horizontal()) ++horizontal_bottom;
    }
    // u(d): crossings between marked edges whose top vertices both lie right
    // of the wall.
    int u = 0;
    std::vector<int> right_marked;
    for (int t : d.marked) {
        if (t > r) right_marked.push_back(t);
    }
    for (std::size_t i = 0; i < right_marked.size(); ++i) {
        for (std::size_t j = i + 1; j < right_marked.size(); ++j) {
            if (d.bottom_of[right_marked[i] - 1] > d.bottom_of[right_marked[j] - 1]) ++u;
        }
    }
    int exponent = u + (vertical_left + horizontal_top) * horizontal_bottom;
    return {flipped, exponent % 2 == 0 ? 1 : -1};
}

}  // namespace wbs
