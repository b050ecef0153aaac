#include "wbs/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wbs {

GeneratorWord parse_word(const std::string& text, int r, int s) {
    GeneratorWord w{r, s, {}};
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        GenName name;
        if (token == "e") {
            name = {GenKind::E, 0};
        } else if ((token[0] == 's' || token[0] == 'c') && token.size() > 1) {
            int index;
            try {
                std::size_t used = 0;
                index = std::stoi(token.substr(1), &used);
                if (used != token.size() - 1) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad word letter '" + token + "'");
            }
            name = {token[0] == 's' ? GenKind::S : GenKind::C, index};
        } else {
            throw std::invalid_argument("bad word letter '" + token + "'");
        }
        generator(r, s, name);  // admissibility check
        w.letters.push_back(name);
    }
    return w;
}

std::string word_to_string(const GeneratorWord& w) {
    std::string out;
    for (const auto& l : w.letters) {
        if (!out.empty()) out += " ";
        switch (l.kind) {
            case GenKind::S: out += "s" + std::to_string(l.index); break;
            case GenKind::E: out += "e"; break;
            case GenKind::C: out += "c" + std::to_string(l.index); break;
        }
    }
    return out;
}

WalledElement eval_word(const GeneratorWord& w) {
    WalledElement acc = walled_element_of(identity_walled(w.r, w.s));
    for (const auto& letter : w.letters) {
        acc = elem_mul(acc, walled_element_of(generator(w.r, w.s, letter)));
    }
    return acc;
}

GeneratorWord e_pq_word(int r, int s, int p, int q) {
    if (p < 1 || p > r || q <= r || q > r + s) {
        throw std::invalid_argument("e_pq needs 1 <= p <= r < q <= r+s");
    }
    GeneratorWord w{r, s, {}};
    std::vector<GenName> sigma;
    for (int i = q - 1; i >= r + 1; --i) sigma.push_back({GenKind::S, i});
    for (int i = p; i <= r - 1; ++i) sigma.push_back({GenKind::S, i});
    w.letters = sigma;
    w.letters.push_back({GenKind::E, 0});
    w.letters.insert(w.letters.end(), sigma.rbegin(), sigma.rend());
    return w;
}

WalledDiagram e_pq_diagram(int r, int s, int p, int q) {
    if (p < 1 || p > r || q <= r || q > r + s) {
        throw std::invalid_argument("e_pq needs 1 <= p <= r < q <= r+s");
    }
    std::vector<WalledEdge> edges;
    edges.emplace_back(top_vertex(p), top_vertex(q), false);
    edges.emplace_back(bot_vertex(p), bot_vertex(q), false);
    for (int c = 1; c <= r + s; ++c) {
        if (c == p || c == q) continue;
        edges.emplace_back(top_vertex(c), bot_vertex(c), false);
    }
    return new_walled(r, s, std::move(edges));
}

GeneratorWord transposition_word(int r, int s, int i, int j) {
    if (i > j) std::swap(i, j);
    bool same_side = (i <= r) == (j <= r);
    if (!same_side || i == j) throw std::invalid_argument("transposition must stay on one side");
    GeneratorWord w{r, s, {}};
    for (int t = i; t <= j - 1; ++t) w.letters.push_back({GenKind::S, t});
    for (int t = j - 2; t >= i; --t) w.letters.push_back({GenKind::S, t});
    return w;
}

bool RelationCheckReport::all_pass() const {
    return std::all_of(relations.begin(), relations.end(),
                       [](const RelationCheck& c) { return c.pass; });
}

namespace {

struct RelationRecorder {
    std::vector<RelationCheck>& sink;

    void equal(const std::string& name, const WalledElement& lhs, const WalledElement& rhs) {
        bool pass = lhs == rhs;
        sink.push_back({name, pass, pass ? "" : name});
    }
    void zero(const std::string& name, const WalledElement& x) {
        bool pass = x.is_zero();
        sink.push_back({name, pass, pass ? "" : name});
    }
};

WalledElement ev(int r, int s, std::initializer_list<GenName> letters) {
    GeneratorWord w{r, s, {}};
    w.letters = letters;
    return eval_word(w);
}

WalledElement cat(const WalledElement& a, const WalledElement& b) { return elem_mul(a, b); }

}  // namespace

RelationCheckReport check_presentation_relations(int r, int s) {
    RelationCheckReport report{r, s, {}};
    RelationRecorder rec{report.relations};
    const int m = r + s;
    auto S = [&](int i) { return GenName{GenKind::S, i}; };
    auto C = [&](int i) { return GenName{GenKind::C, i}; };
    const GenName E{GenKind::E, 0};
    auto admissible_s = [&](int i) { return i >= 1 && i < m && i != r; };
    WalledElement one = walled_element_of(identity_walled(r, s));

    // Symmetric-group relations.
    for (int i = 1; i < m; ++i) {
        if (!admissible_s(i)) continue;
        rec.equal("s" + std::to_string(i) + "^2 = 1", ev(r, s, {S(i), S(i)}), one);
        if (admissible_s(i + 1)) {
            rec.equal("braid s" + std::to_string(i) + " s" + std::to_string(i + 1),
                      ev(r, s, {S(i), S(i + 1), S(i)}), ev(r, s, {S(i + 1), S(i), S(i + 1)}));
        }
        for (int j = i + 2; j < m; ++j) {
            if (!admissible_s(j)) continue;
            rec.equal("s" + std::to_string(i) + " s" + std::to_string(j) + " commute",
                      ev(r, s, {S(i), S(j)}), ev(r, s, {S(j), S(i)}));
        }
    }

    if (r >= 1 && s >= 1) {
        rec.zero("e^2 = 0", ev(r, s, {E, E}));
        for (int j = 1; j < m; ++j) {
            if (!admissible_s(j) || j == r - 1 || j == r + 1) continue;
            rec.equal("e s" + std::to_string(j) + " = s" + std::to_string(j) + " e",
                      ev(r, s, {E, S(j)}), ev(r, s, {S(j), E}));
        }
        if (r >= 2) {
            rec.equal("e = e s_{r-1} e", ev(r, s, {E}), ev(r, s, {E, S(r - 1), E}));
        }
        if (s >= 2) {
            rec.equal("e = e s_{r+1} e", ev(r, s, {E}), ev(r, s, {E, S(r + 1), E}));
        }
        if (r >= 2 && s >= 2) {
            rec.equal("s_{r-1} s_{r+1} e s_{r+1} s_{r-1} e = e s_{r-1} s_{r+1} e s_{r+1} s_{r-1}",
                      ev(r, s, {S(r - 1), S(r + 1), E, S(r + 1), S(r - 1), E}),
                      ev(r, s, {E, S(r - 1), S(r + 1), E, S(r + 1), S(r - 1)}));
            rec.equal("s_{r-1} s_{r+1} e s_{r+1} s_{r-1} e = e s_{r-1} s_{r+1} e",
                      ev(r, s, {S(r - 1), S(r + 1), E, S(r + 1), S(r - 1), E}),
                      ev(r, s, {E, S(r - 1), S(r + 1), E}));
        }
    }

    // Clifford relations, with the sign split at the wall.
    for (int i = 1; i <= m; ++i) {
        WalledElement square = ev(r, s, {C(i), C(i)});
        if (i <= r) {
            rec.equal("c" + std::to_string(i) + "^2 = -1", square, -one);
        } else {
            rec.equal("c" + std::to_string(i) + "^2 = +1", square, one);
        }
        for (int j = 1; j <= m; ++j) {
            if (i == j) continue;
            rec.equal("c" + std::to_string(i) + " c" + std::to_string(j) + " = -c" +
                          std::to_string(j) + " c" + std::to_string(i),
                      ev(r, s, {C(i), C(j)}), -ev(r, s, {C(j), C(i)}));
        }
    }
    for (int i = 1; i < m; ++i) {
        if (!admissible_s(i)) continue;
        rec.equal("s_i c_i s_i = c_{i+1} at i=" + std::to_string(i),
                  ev(r, s, {S(i), C(i), S(i)}), ev(r, s, {C(i + 1)}));
        for (int j = 1; j <= m; ++j) {
            if (j == i || j == i + 1) continue;
            rec.equal("s" + std::to_string(i) + " c" + std::to_string(j) + " commute",
                      ev(r, s, {S(i), C(j)}), ev(r, s, {C(j), S(i)}));
        }
    }

    if (r >= 1 && s >= 1) {
        rec.equal("c_r e = c_{r+1} e", ev(r, s, {C(r), E}), ev(r, s, {C(r + 1), E}));
        rec.equal("e c_r = e c_{r+1}", ev(r, s, {E, C(r)}), ev(r, s, {E, C(r + 1)}));
        rec.zero("e c_r e = 0", ev(r, s, {E, C(r), E}));
        for (int j = 1; j <= m; ++j) {
            if (j == r || j == r + 1) continue;
            rec.equal("e c" + std::to_string(j) + " = c" + std::to_string(j) + " e",
                      ev(r, s, {E, C(j)}), ev(r, s, {C(j), E}));
        }

        // Derived relations on the conjugates e_{p,q}; the word and the
        // pictured diagram must agree first.
        auto epq = [&](int p, int q) { return eval_word(e_pq_word(r, s, p, q)); };
        auto trans = [&](int i, int j) { return eval_word(transposition_word(r, s, i, j)); };
        for (int p = 1; p <= r; ++p) {
            for (int q = r + 1; q <= m; ++q) {
                rec.equal("e_pq word = diagram, p=" + std::to_string(p) +
                              " q=" + std::to_string(q),
                          epq(p, q), walled_element_of(e_pq_diagram(r, s, p, q)));
            }
        }
        for (int p = 1; p <= r; ++p) {
            for (int q = r + 1; q <= m; ++q) {
                const WalledElement e = epq(p, q);
                std::string pq = "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")";
                // (1) disjoint same-side transpositions commute with e_{p,q}
                for (int x = 1; x <= m; ++x) {
                    for (int y = x + 1; y <= m; ++y) {
                        if ((x <= r) != (y <= r)) continue;
                        if (x == p || y == p || x == q || y == q) continue;
                        rec.equal("(" + std::to_string(x) + " " + std::to_string(y) +
                                      ") commutes with e " + pq,
                                  cat(trans(x, y), e), cat(e, trans(x, y)));
                    }
                }
                // (2) transpositions through p or q conjugate the index
                for (int p2 = 1; p2 <= r; ++p2) {
                    if (p2 == p) continue;
                    rec.equal("(p p') e_pq = e_p'q (p p') " + pq,
                              cat(trans(p, p2), e), cat(epq(p2, q), trans(p, p2)));
                }
                for (int q2 = r + 1; q2 <= m; ++q2) {
                    if (q2 == q) continue;
                    rec.equal("(q q') e_pq = e_pq' (q q') " + pq,
                              cat(trans(q, q2), e), cat(epq(p, q2), trans(q, q2)));
                }
                // (3)-(5) interactions of two conjugates
                for (int p2 = 1; p2 <= r; ++p2) {
                    for (int q2 = r + 1; q2 <= m; ++q2) {
                        if (p2 == p || q2 == q) continue;
                        rec.equal("e_pq e_p'q' commute " + pq, cat(e, epq(p2, q2)),
                                  cat(epq(p2, q2), e));
                        rec.equal("e_pq e_p'q' (p p')(q q') = e_pq e_p'q' " + pq,
                                  cat(cat(cat(e, epq(p2, q2)), trans(p, p2)), trans(q, q2)),
                                  cat(e, epq(p2, q2)));
                    }
                }
                for (int q2 = r + 1; q2 <= m; ++q2) {
                    if (q2 == q) continue;
                    rec.equal("e_pq e_pq' = e_pq (q q') " + pq, cat(e, epq(p, q2)),
                              cat(e, trans(q, q2)));
                }
                for (int p2 = 1; p2 <= r; ++p2) {
                    if (p2 == p) continue;
                    rec.equal("e_pq e_p'q = e_pq (p p') " + pq, cat(e, epq(p2, q)),
                              cat(e, trans(p, p2)));
                }
                // (6) c_q e_pq = c_p e_pq and mirrored
                auto cd = [&](int i) { return ev(r, s, {C(i)}); };
                rec.equal("c_q e_pq = c_p e_pq " + pq, cat(cd(q), e), cat(cd(p), e));
                rec.equal("e_pq c_q = e_pq c_p " + pq, cat(e, cd(q)), cat(e, cd(p)));
                // (7) other c's commute
                for (int x = 1; x <= m; ++x) {
                    if (x == p || x == q) continue;
                    rec.equal("c" + std::to_string(x) + " commutes with e " + pq,
                              cat(cd(x), e), cat(e, cd(x)));
                }
                // (8) square zero and sandwiched c
                rec.zero("e_pq^2 = 0 " + pq, cat(e, e));
                rec.zero("e_pq c_p e_pq = 0 " + pq, cat(cat(e, cd(p)), e));
            }
        }
    }
    return report;
}

RelationCheckReport check_sergeev_relations(int k) {
    RelationCheckReport report{k, 0, {}};
    auto& sink = report.relations;
    auto s_diag = [&](int i) {
        std::vector<int> perm(k);
        for (int t = 0; t < k; ++t) perm[t] = t + 1;
        std::swap(perm[i - 1], perm[i]);
        return new_k_diagram(k, std::move(perm), {});
    };
    auto c_diag = [&](int i) { return new_k_diagram(k, identity_k(k).bottom_of, {i}); };
    auto mul = [&](const KElement& a, const KElement& b) { return elem_mul(a, b); };
    auto el = [&](const KSuperDiagram& d) { return k_element_of(d); };
    auto push = [&](const std::string& name, const KElement& lhs, const KElement& rhs) {
        bool pass = lhs == rhs;
        sink.push_back({name, pass, pass ? "" : name});
    };
    KElement one = el(identity_k(k));

    for (int i = 1; i < k; ++i) {
        push("s" + std::to_string(i) + "^2 = 1", mul(el(s_diag(i)), el(s_diag(i))), one);
        if (i + 1 < k) {
            push("braid " + std::to_string(i),
                 mul(mul(el(s_diag(i)), el(s_diag(i + 1))), el(s_diag(i))),
                 mul(mul(el(s_diag(i + 1)), el(s_diag(i))), el(s_diag(i + 1))));
        }
        for (int j = i + 2; j < k; ++j) {
            push("s" + std::to_string(i) + " s" + std::to_string(j) + " commute",
                 mul(el(s_diag(i)), el(s_diag(j))), mul(el(s_diag(j)), el(s_diag(i))));
        }
    }
    for (int i = 1; i <= k; ++i) {
        push("c" + std::to_string(i) + "^2 = -1", mul(el(c_diag(i)), el(c_diag(i))),
             el(identity_k(k)).scaled(-1));
        for (int j = 1; j <= k; ++j) {
            if (i == j) continue;
            push("c" + std::to_string(i) + " c" + std::to_string(j) + " anticommute",
                 mul(el(c_diag(i)), el(c_diag(j))), -mul(el(c_diag(j)), el(c_diag(i))));
        }
    }
    for (int i = 1; i < k; ++i) {
        push("s_i c_i s_i = c_{i+1} at i=" + std::to_string(i),
             mul(mul(el(s_diag(i)), el(c_diag(i))), el(s_diag(i))), el(c_diag(i + 1)));
        for (int j = 1; j <= k; ++j) {
            if (j == i || j == i + 1) continue;
            push("s" + std::to_string(i) + " c" + std::to_string(j) + " commute",
                 mul(el(s_diag(i)), el(c_diag(j))), mul(el(c_diag(j)), el(s_diag(i))));
        }
    }
    return report;
}

BasisXForm decompose_to_basis_form(const WalledDiagram& d) {
    BasisXForm form;
    form.r = d.r;
    form.s = d.s;
    const int m = d.size();

    std::vector<std::pair<int, int>> bottom;  // (left, right) of bottom horizontals
    std::vector<std::pair<int, int>> top;
    for (const auto& e : d.edges) {
        if (e.is_bottom_horizontal()) bottom.emplace_back(e.left_col(), e.right_col());
        if (e.is_top_horizontal()) top.emplace_back(e.left_col(), e.right_col());
        if (e.marked) {
            if (e.is_bottom_horizontal()) form.P.push_back(e.left_col());
            if (e.is_top_horizontal()) form.Q.push_back(e.left_col());
            if (e.is_vertical()) form.Q.push_back(e.top_col());
        }
    }
    std::sort(bottom.begin(), bottom.end());
    std::sort(top.begin(), top.end());
    std::sort(form.P.begin(), form.P.end());
    std::sort(form.Q.begin(), form.Q.end());
    form.pairs = bottom;

    // sigma joins the i-th top horizontal's endpoints to the i-th bottom
    // horizontal's, and copies the vertical strands.
    form.sigma.assign(m, 0);
    for (std::size_t i = 0; i < bottom.size(); ++i) {
        form.sigma[top[i].first - 1] = bottom[i].first;
        form.sigma[top[i].second - 1] = bottom[i].second;
    }
    for (const auto& e : d.edges) {
        if (e.is_vertical()) form.sigma[e.top_col() - 1] = e.bot_col();
    }
    validate_basis_form(form);
    return form;
}

void validate_basis_form(const BasisXForm& f) {
    const int m = f.r + f.s;
    std::vector<char> seen_q(m + 1, 0);
    int prev_p = 0;
    for (const auto& [p, q] : f.pairs) {
        if (p <= prev_p || p > f.r) throw std::invalid_argument("pairs p-part must increase");
        if (q <= f.r || q > m || seen_q[q]) throw std::invalid_argument("pairs q-part invalid");
        seen_q[q] = 1;
        prev_p = p;
    }
    std::vector<int> inv = invert_perm(f.sigma);
    int prev = 0;
    for (const auto& [p, q] : f.pairs) {
        if (inv[p - 1] <= prev) {
            throw std::invalid_argument("sigma^{-1}(p_i) must increase");
        }
        prev = inv[p - 1];
    }
    for (int p : f.P) {
        if (std::find_if(f.pairs.begin(), f.pairs.end(),
                         [&](const auto& pr) { return pr.first == p; }) == f.pairs.end()) {
            throw std::invalid_argument("P must sit inside the p-parts");
        }
    }
    for (int q0 : f.Q) {
        for (const auto& [p, q] : f.pairs) {
            if (inv[q - 1] == q0) throw std::invalid_argument("Q meets sigma^{-1}(q_i)");
        }
    }
}

WalledElement eval_basis_form(const BasisXForm& f) {
    WalledElement acc = walled_element_of(identity_walled(f.r, f.s));
    auto mul_diag = [&](const WalledDiagram& d) { acc = elem_mul(acc, walled_element_of(d)); };
    for (int p : f.P) mul_diag(generator(f.r, f.s, {GenKind::C, p}));
    for (const auto& [p, q] : f.pairs) mul_diag(e_pq_diagram(f.r, f.s, p, q));
    mul_diag(permutation_walled(f.r, f.s, f.sigma));
    for (int q : f.Q) mul_diag(generator(f.r, f.s, {GenKind::C, q}));
    return acc;
}

DimPair dim_formulas(int r, int s) {
    if (r < 0 || s < 0 || r + s <= 0 || r + s > 20) {
        throw std::invalid_argument("dim_formulas needs 0 < r+s <= 20");
    }
    auto factorial = [](int x) {
        unsigned long long acc = 1;
        for (int t = 2; t <= x; ++t) acc *= t;
        return acc;
    };
    auto binom = [](int a, int b) {
        if (b < 0 || b > a) return 0ull;
        unsigned long long acc = 1;
        for (int t = 1; t <= b; ++t) acc = acc * (a - b + t) / t;
        return acc;
    };
    DimPair out;
    out.factorial_form = (1ull << (r + s)) * factorial(r + s);
    for (int i = 0; i <= std::min(r, s); ++i) {
        unsigned long long inner = binom(r, i) * binom(s, i) * factorial(i);
        out.sum_form += (1ull << (r + s)) * inner * inner * factorial(r - i) * factorial(s - i);
    }
    return out;
}

}  // namespace wbs
