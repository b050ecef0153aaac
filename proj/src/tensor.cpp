#include "wbs/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace wbs {

int parity_sum(const MultiIndex& m) {
    int p = 0;
    for (const auto& letter : m) p += letter.parity();
    return p;
}

int parity_pair_sum(const MultiIndex& m) {
    // Only odd letters contribute; count their unordered pairs.
    int odd = 0;
    for (const auto& letter : m) odd += letter.parity();
    return odd * (odd - 1) / 2;
}

std::size_t basis_index(const MultiIndex& m, int n) {
    std::size_t rank = 0;
    for (const auto& letter : m) {
        if (letter.value < 1 || letter.value > n) {
            throw std::out_of_range("index letter value out of range");
        }
        rank = rank * (2 * n) + static_cast<std::size_t>(letter.value - 1 + n * letter.parity());
    }
    return rank;
}

MultiIndex basis_unrank(std::size_t pos, int n, int len) {
    MultiIndex m(len);
    for (int t = len - 1; t >= 0; --t) {
        int code = static_cast<int>(pos % (2 * n));
        pos /= 2 * n;
        m[t] = {code % n + 1, code >= n};
    }
    return m;
}

std::size_t tensor_dim(int n, int len) {
    std::size_t dim = 1;
    for (int t = 0; t < len; ++t) dim *= 2 * static_cast<std::size_t>(n);
    return dim;
}

namespace {

void check_letters(const MultiIndex& m, int n) {
    for (const auto& letter : m) {
        if (letter.value < 1 || letter.value > n) {
            throw std::out_of_range("index letter value out of range");
        }
    }
}

}  // namespace

void check_tensor_guard(int n, int len, std::size_t guard) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (tensor_dim(n, len) > guard) {
        throw std::invalid_argument("tensor dimension (2n)^len exceeds guard " +
                                    std::to_string(guard));
    }
}

int weight_k(const KSuperDiagram& d, const MultiIndex& i, const MultiIndex& j, int n) {
    if (static_cast<int>(i.size()) != d.k || static_cast<int>(j.size()) != d.k) {
        throw std::invalid_argument("weight_k label length mismatch");
    }
    check_letters(i, n);
    check_letters(j, n);
    for (int t = 1; t <= d.k; ++t) {
        const IndexLetter& bottom = i[d.bottom_of[t - 1] - 1];
        const IndexLetter& top = j[t - 1];
        if (d.marked.count(t) ? !(top == bottom.bar()) : !(top == bottom)) return 0;
    }
    int exponent = 0;
    for (int t1 = 1; t1 <= d.k; ++t1) {
        for (int t2 = t1 + 1; t2 <= d.k; ++t2) {
            if (d.bottom_of[t1 - 1] > d.bottom_of[t2 - 1]) {
                exponent += i[d.bottom_of[t1 - 1] - 1].parity() *
                            i[d.bottom_of[t2 - 1] - 1].parity();
            }
        }
    }
    int prefix = 0;
    int at = 1;
    for (int b : d.marked) {
        for (; at <= b; ++at) prefix += j[at - 1].parity();
        exponent += prefix;
    }
    return exponent % 2 == 0 ? 1 : -1;
}

namespace {

const IndexLetter& label_at(const Vertex& v, const MultiIndex& i, const MultiIndex& j) {
    return v.bottom ? i[v.col - 1] : j[v.col - 1];
}

// Parity tag of an edge for crossing counts: bottom label for verticals,
// right-vertex label for horizontals.
int edge_parity(const WalledEdge& e, const MultiIndex& i, const MultiIndex& j) {
    if (e.is_vertical()) return i[e.bot_col() - 1].parity();
    const MultiIndex& row = e.is_top_horizontal() ? j : i;
    return row[e.right_col() - 1].parity();
}

}  // namespace

int weight_walled(const WalledDiagram& d, const MultiIndex& i, const MultiIndex& j, int n) {
    const int m = d.size();
    if (static_cast<int>(i.size()) != m || static_cast<int>(j.size()) != m) {
        throw std::invalid_argument("weight_walled label length mismatch");
    }
    check_letters(i, n);
    check_letters(j, n);
    // Edge deltas. Marked verticals read bottom-to-top, marked horizontals
    // left-to-right.
    for (const auto& e : d.edges) {
        const IndexLetter* from;
        const IndexLetter* to;
        if (e.is_vertical()) {
            from = &label_at({true, e.bot_col()}, i, j);
            to = &label_at({e.u.bottom, e.top_col()}, i, j);
        } else {
            bool bottom = e.is_bottom_horizontal();
            from = &label_at({bottom, e.left_col()}, i, j);
            to = &label_at({bottom, e.right_col()}, i, j);
        }
        if (e.marked ? !(*to == from->bar()) : !(*to == *from)) return 0;
    }

    int exponent = 0;
    for (const auto& e : d.edges) {
        if (e.is_bottom_horizontal()) exponent += i[e.right_col() - 1].parity();
    }
    for (std::size_t a = 0; a < d.edges.size(); ++a) {
        for (std::size_t b = a + 1; b < d.edges.size(); ++b) {
            if (edges_cross(d.edges[a], d.edges[b])) {
                exponent += edge_parity(d.edges[a], i, j) * edge_parity(d.edges[b], i, j);
            }
        }
    }

    // Bottom-row marked horizontals: m(e_t) = |i_1| + ... + |i_{a_t}| + t.
    std::vector<int> bottom_marks;
    for (const auto& e : d.edges) {
        if (e.is_bottom_horizontal() && e.marked) bottom_marks.push_back(e.left_col());
    }
    std::sort(bottom_marks.begin(), bottom_marks.end());
    {
        int prefix = 0;
        int at = 1;
        int t = 1;
        for (int a : bottom_marks) {
            for (; at <= a; ++at) prefix += i[at - 1].parity();
            exponent += prefix + t;
            ++t;
        }
    }

    // Top-row reading: tops of marked verticals and left vertices of marked
    // top horizontals; the sum stops before b when b lies right of the wall.
    std::vector<int> top_marks;
    for (const auto& e : d.edges) {
        if (!e.marked) continue;
        if (e.is_vertical()) top_marks.push_back(e.top_col());
        if (e.is_top_horizontal()) top_marks.push_back(e.left_col());
    }
    std::sort(top_marks.begin(), top_marks.end());
    for (int b : top_marks) {
        int limit = b <= d.r ? b : b - 1;
        for (int u = 1; u <= limit; ++u) exponent += j[u - 1].parity();
    }
    return exponent % 2 == 0 ? 1 : -1;
}

SparseExactMatrix phi_matrix(const KSuperDiagram& d, int n) {
    check_tensor_guard(n, d.k);
    const std::size_t dim = tensor_dim(n, d.k);
    SparseExactMatrix out(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        MultiIndex i = basis_unrank(col, n, d.k);
        MultiIndex j(d.k);
        for (int t = 1; t <= d.k; ++t) {
            IndexLetter l = i[d.bottom_of[t - 1] - 1];
            j[t - 1] = d.marked.count(t) ? l.bar() : l;
        }
        int w = weight_k(d, i, j, n);
        out.set(basis_index(j, n), col, Rational(w));
    }
    return out;
}

SparseExactMatrix psi_matrix(const WalledDiagram& d, int n) {
    const int m = d.size();
    check_tensor_guard(n, m);
    const std::size_t dim = tensor_dim(n, m);
    SparseExactMatrix out(dim, dim);

    std::vector<const WalledEdge*> top_horizontals;
    for (const auto& e : d.edges) {
        if (e.is_top_horizontal()) top_horizontals.push_back(&e);
    }
    const std::size_t letters = 2 * static_cast<std::size_t>(n);
    std::size_t free_count = 1;
    for (std::size_t h = 0; h < top_horizontals.size(); ++h) free_count *= letters;

    for (std::size_t col = 0; col < dim; ++col) {
        MultiIndex i = basis_unrank(col, n, m);
        bool alive = true;
        for (const auto& e : d.edges) {
            if (!e.is_bottom_horizontal()) continue;
            const IndexLetter& left = i[e.left_col() - 1];
            const IndexLetter& right = i[e.right_col() - 1];
            if (e.marked ? !(right == left.bar()) : !(right == left)) {
                alive = false;
                break;
            }
        }
        if (!alive) continue;
        MultiIndex j(m);
        for (const auto& e : d.edges) {
            if (!e.is_vertical()) continue;
            IndexLetter l = i[e.bot_col() - 1];
            j[e.top_col() - 1] = e.marked ? l.bar() : l;
        }
        // One consistent top labeling per choice of letters on the free top
        // horizontals.
        for (std::size_t choice = 0; choice < free_count; ++choice) {
            std::size_t rest = choice;
            for (const auto* e : top_horizontals) {
                int code = static_cast<int>(rest % letters);
                rest /= letters;
                IndexLetter left{code % n + 1, code >= n};
                j[e->left_col() - 1] = left;
                j[e->right_col() - 1] = e->marked ? left.bar() : left;
            }
            int w = weight_walled(d, i, j, n);
            out.set(basis_index(j, n), col, Rational(w));
        }
    }
    return out;
}

SparseExactMatrix psi_matrix(const WalledElement& x, int n) {
    const int m = x.ambient().r + x.ambient().s;
    const std::size_t dim = tensor_dim(n, m);
    SparseExactMatrix out(dim, dim);
    for (const auto& [d, coeff] : x.terms()) {
        SparseExactMatrix part = psi_matrix(d, n);
        for (const auto& [rc, v] : part.entries()) {
            out.add(rc.first, rc.second, v * Rational(coeff));
        }
    }
    return out;
}

SparseExactMatrix phi_matrix(const KElement& x, int n) {
    const std::size_t dim = tensor_dim(n, x.ambient().k);
    SparseExactMatrix out(dim, dim);
    for (const auto& [d, coeff] : x.terms()) {
        SparseExactMatrix part = phi_matrix(d, n);
        for (const auto& [rc, v] : part.entries()) {
            out.add(rc.first, rc.second, v * Rational(coeff));
        }
    }
    return out;
}

SparseExactMatrix p_matrix(int n) {
    SparseExactMatrix out(2 * n, 2 * n);
    for (int code = 0; code < 2 * n; ++code) {
        IndexLetter l{code % n + 1, code >= n};
        IndexLetter target = l.bar();
        int sign = l.parity() == 0 ? -1 : 1;  // (-1)^(|i|+1)
        out.set(static_cast<std::size_t>(target.value - 1 + n * target.parity()), code,
                Rational(sign));
    }
    return out;
}

std::vector<QnGenerator> qn_generators(int n) {
    std::vector<QnGenerator> gens;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) gens.push_back({i, j, false});
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) gens.push_back({i, j, true});
    }
    return gens;
}

SparseExactMatrix qn_gen_matrix(const QnGenerator& g, int n, int r, int s) {
    const int len = r + s;
    check_tensor_guard(n, len);
    const std::size_t dim = tensor_dim(n, len);
    SparseExactMatrix out(dim, dim);
    const IndexLetter second{g.j, g.barred};

    for (std::size_t col = 0; col < dim; ++col) {
        MultiIndex m = basis_unrank(col, n, len);
        int koszul = 0;  // parity of letters left of the acting slot
        for (int t = 1; t <= len; ++t) {
            const IndexLetter k = m[t - 1];
            int outer = g.parity() * koszul;
            auto emit = [&](IndexLetter target, int coeff) {
                MultiIndex image = m;
                image[t - 1] = target;
                int sign = (outer % 2 == 0 ? 1 : -1) * coeff;
                out.add(basis_index(image, n), col, Rational(sign));
            };
            if (t <= r) {
                // e_{i,J} v_k = delta_{J,k} v_i + delta_{Jbar,k} v_ibar
                if (k == second) emit({g.i, false}, 1);
                if (k == second.bar()) emit({g.i, true}, 1);
            } else {
                // e_{i,J} w_k = -(-1)^{|J||k|}(delta_{i,k} w_J +
                //                delta_{ibar,k} w_Jbar)
                int inner = second.parity() * k.parity();
                int coeff = inner % 2 == 0 ? -1 : 1;
                if (k == IndexLetter{g.i, false}) emit(second, coeff);
                if (k == IndexLetter{g.i, true}) emit(second.bar(), coeff);
            }
            koszul += k.parity();
        }
    }
    return out;
}

SparseExactMatrix sergeev_gen_action(const GenName& name, int n, int k) {
    check_tensor_guard(n, k);
    const std::size_t dim = tensor_dim(n, k);
    SparseExactMatrix out(dim, dim);
    if (name.kind == GenKind::S) {
        int jslot = name.index;
        if (jslot < 1 || jslot >= k) throw std::invalid_argument("s index out of range");
        for (std::size_t col = 0; col < dim; ++col) {
            MultiIndex m = basis_unrank(col, n, k);
            int sign = (m[jslot - 1].parity() * m[jslot].parity()) % 2 == 0 ? 1 : -1;
            std::swap(m[jslot - 1], m[jslot]);
            out.set(basis_index(m, n), col, Rational(sign));
        }
        return out;
    }
    if (name.kind == GenKind::C) {
        int jslot = name.index;
        if (jslot < 1 || jslot > k) throw std::invalid_argument("c index out of range");
        for (std::size_t col = 0; col < dim; ++col) {
            MultiIndex m = basis_unrank(col, n, k);
            int prefix = 0;
            for (int u = 1; u < jslot; ++u) prefix += m[u - 1].parity();
            int sign = (prefix + m[jslot - 1].parity() + 1) % 2 == 0 ? 1 : -1;
            m[jslot - 1] = m[jslot - 1].bar();
            out.set(basis_index(m, n), col, Rational(sign));
        }
        return out;
    }
    throw std::invalid_argument("sergeev_gen_action takes s_j or c_j");
}

SparseExactMatrix right_action_word(const std::vector<GenName>& word, int n, int k) {
    SparseExactMatrix acc = SparseExactMatrix::identity(tensor_dim(n, k));
    // v . (l_1 l_2 ... l_m) applies l_1 first, so matrices compose reversed.
    for (const auto& letter : word) {
        acc = mat_mul(sergeev_gen_action(letter, n, k), acc);
    }
    return acc;
}

SparseExactMatrix flip_endo(const SparseExactMatrix& phi, int r, int s, int n) {
    const std::size_t right_dim = tensor_dim(n, s);
    const std::size_t dim = phi.n_rows();
    if (dim != tensor_dim(n, r + s) || phi.n_cols() != dim) {
        throw std::invalid_argument("flip_endo shape mismatch");
    }
    SparseExactMatrix out(dim, dim);
    for (const auto& [rc, v] : phi.entries()) {
        std::size_t jl = rc.first / right_dim;
        std::size_t ir = rc.first % right_dim;
        std::size_t il = rc.second / right_dim;
        std::size_t jr = rc.second % right_dim;
        MultiIndex i_right = basis_unrank(ir, n, s);
        MultiIndex j_right = basis_unrank(jr, n, s);
        int exponent = (parity_sum(i_right) + parity_sum(j_right)) * parity_sum(i_right) +
                       parity_pair_sum(i_right) + parity_pair_sum(j_right);
        Rational value = exponent % 2 == 0 ? v : -v;
        out.add(jl * right_dim + jr, il * right_dim + ir, value);
    }
    return out;
}

}  // namespace wbs
