// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Every tolerance is exact (integer equality); the only
// probabilistic result is the three-prime modular rank, which must agree
// across primes and is flagged as such in its report.

#include "wbs/duality.hpp"
#include "wbs/json_io.hpp"
#include "wbs/presentation.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace wbs;
using VP = std::pair<Vertex, Vertex>;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<bool(std::string&)> run;
};

bool expect(bool ok, const std::string& what, std::string& detail) {
    if (!ok && detail.empty()) detail = what;
    return ok;
}

// --- criterion bodies -------------------------------------------------------

bool dimension_counts(std::string& detail) {
    bool ok = true;
    const std::vector<std::tuple<int, int, std::size_t>> cases = {
        {1, 1, 8}, {2, 1, 48}, {1, 2, 48}, {2, 2, 384}};
    for (const auto& [r, s, expected] : cases) {
        std::size_t got = enumerate_walled(r, s).size();
        auto dims = dim_formulas(r, s);
        ok &= expect(got == expected, "count mismatch at (" + std::to_string(r) + "," +
                                          std::to_string(s) + ")", detail);
        ok &= expect(dims.factorial_form == expected && dims.sum_form == expected,
                     "formula mismatch at (" + std::to_string(r) + "," + std::to_string(s) + ")",
                     detail);
    }
    return ok;
}

bool sergeev_homomorphism(std::string& detail) {
    for (int k : {2, 3}) {
        auto basis = enumerate_k(k);
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                auto [prod, report] = sergeev_mul(a, b);
                const auto& [d, coeff] = *prod.terms().begin();
                NormalWord expected = phi_k(d);
                expected.sign = static_cast<int>(coeff);
                if (!(normal_mul(phi_k(a), phi_k(b)) == expected)) {
                    detail = "pair " + a.serialize() + " * " + b.serialize();
                    return false;
                }
            }
        }
    }
    return true;
}

bool worked_sign_examples(std::string& detail) {
    auto d1 = new_k_diagram(5, {2, 1, 4, 3, 5}, {1, 2, 3, 4});
    auto d2 = new_k_diagram(5, {2, 3, 1, 5, 4}, {3, 4});
    auto [kp, krep] = sergeev_mul(d1, d2);
    bool ok = expect(krep.rho == 1 && krep.ell == 4, "Sergeev worked pair signs", detail);

    auto w1 = new_walled(3, 3,
                         {VP{top_vertex(1), bot_vertex(1)}, VP{top_vertex(3), bot_vertex(3)},
                          VP{top_vertex(5), bot_vertex(4)}, VP{top_vertex(6), bot_vertex(6)},
                          VP{top_vertex(2), top_vertex(4)}, VP{bot_vertex(2), bot_vertex(5)}},
                         {VP{top_vertex(1), bot_vertex(1)}, VP{top_vertex(6), bot_vertex(6)},
                          VP{top_vertex(2), top_vertex(4)}, VP{bot_vertex(2), bot_vertex(5)}});
    auto w2 = new_walled(3, 3,
                         {VP{top_vertex(3), bot_vertex(2)}, VP{top_vertex(5), bot_vertex(5)},
                          VP{top_vertex(1), top_vertex(6)}, VP{top_vertex(2), top_vertex(4)},
                          VP{bot_vertex(3), bot_vertex(4)}, VP{bot_vertex(1), bot_vertex(6)}},
                         {VP{top_vertex(1), top_vertex(6)}, VP{bot_vertex(3), bot_vertex(4)},
                          VP{bot_vertex(1), bot_vertex(6)}});
    auto [wp, wrep] = walled_mul(w1, w2);
    ok &= expect(wrep.c == 2 && wrep.ell1 == 2 && wrep.rho1 == 1 && wrep.p1 == 1 &&
                     wrep.ell2 == 3 && wrep.rho2 == 1 && wrep.p2 == 1,
                 "walled worked pair counters", detail);
    ok &= expect(!wp.is_zero() && wp.terms().begin()->second == -1, "walled worked pair sign",
                 detail);
    return ok;
}

bool word_action_equality(std::string& detail) {
    const int n = 2;
    for (int k = 1; k <= 3; ++k) {
        for (const auto& d : enumerate_k(k)) {
            NormalWord w = phi_k(d);
            // Bubble-sort decomposition of sigma into adjacent swaps.
            std::vector<int> work = w.sigma;
            std::vector<int> swaps;
            bool moved = true;
            while (moved) {
                moved = false;
                for (std::size_t i = 0; i + 1 < work.size(); ++i) {
                    if (work[i] > work[i + 1]) {
                        std::swap(work[i], work[i + 1]);
                        swaps.push_back(static_cast<int>(i) + 1);
                        moved = true;
                    }
                }
            }
            std::vector<GenName> word;
            for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
                word.push_back({GenKind::S, *it});
            }
            for (int b : w.clifford) word.push_back({GenKind::C, b});
            if (!(phi_matrix(d, n) == right_action_word(word, n, k))) {
                detail = d.serialize();
                return false;
            }
        }
    }
    return true;
}

bool weight_examples(std::string& detail) {
    auto fig1 = new_k_diagram(5, {3, 1, 5, 2, 4}, {1, 4, 5});
    MultiIndex i1 = {{1, false}, {2, false}, {1, true}, {1, true}, {2, true}};
    MultiIndex j1 = {{1, false}, {1, false}, {2, true}, {2, true}, {1, false}};
    bool ok = expect(weight_k(fig1, i1, j1, 2) == -1, "pictured 5-diagram weight", detail);

    auto d = new_walled(2, 2,
                        {VP{top_vertex(1), top_vertex(4)}, VP{bot_vertex(1), bot_vertex(3)},
                         VP{top_vertex(2), bot_vertex(2)}, VP{top_vertex(3), bot_vertex(4)}},
                        {VP{bot_vertex(1), bot_vertex(3)}, VP{top_vertex(2), bot_vertex(2)},
                         VP{top_vertex(3), bot_vertex(4)}});
    const int n = 2;
    const std::size_t dim = tensor_dim(n, 4);
    for (std::size_t a = 0; a < dim; ++a) {
        MultiIndex i = basis_unrank(a, n, 4);
        for (std::size_t b = 0; b < dim; ++b) {
            MultiIndex j = basis_unrank(b, n, 4);
            int expected = (i[0].bar() == i[2] && i[1].bar() == j[1] && i[3].bar() == j[2] &&
                            j[0] == j[3])
                               ? 1
                               : 0;
            if (expected != 0) {
                int exponent = i[2].parity() + i[1].parity() * i[2].parity() +
                               i[1].parity() * j[3].parity() + i[3].parity() * j[3].parity() +
                               (i[0].parity() + 1) + 2 * (j[0].parity() + j[1].parity());
                expected = exponent % 2 == 0 ? 1 : -1;
            }
            if (weight_walled(d, i, j, n) != expected) {
                detail = "labeling " + std::to_string(a) + "," + std::to_string(b);
                return false;
            }
        }
    }
    return ok;
}

bool supercommutation(std::string& detail) {
    const int n = 2;
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
        auto basis = enumerate_walled(r, s);
        for (const QnGenerator& g : qn_generators(n)) {
            SparseExactMatrix rho_g = qn_gen_matrix(g, n, r, s);
            for (const auto& d : basis) {
                SparseExactMatrix m = psi_matrix(d, n);
                SparseExactMatrix lhs = mat_mul(rho_g, m);
                SparseExactMatrix rhs = mat_mul(m, rho_g);
                if ((g.parity() * d.parity()) % 2 == 1) rhs = -rhs;
                if (!(lhs == rhs)) {
                    detail = d.serialize();
                    return false;
                }
            }
        }
    }
    return true;
}

bool flip_square(std::string& detail) {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
        for (const auto& entry : verify_flip_square(2, r, s)) {
            if (!entry.pass) {
                detail = entry.name;
                return false;
            }
        }
    }
    return true;
}

bool mixed_homomorphism(std::string& detail) {
    const int n = 2;
    auto check_pair = [&](const WalledDiagram& a, const WalledDiagram& b) {
        auto [prod, rep] = walled_mul(a, b);
        return psi_matrix(prod, n) == mat_mul(psi_matrix(b, n), psi_matrix(a, n));
    };
    for (const auto& a : enumerate_walled(1, 1)) {
        for (const auto& b : enumerate_walled(1, 1)) {
            if (!check_pair(a, b)) {
                detail = a.serialize() + " * " + b.serialize();
                return false;
            }
        }
    }
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}}) {
        auto basis = enumerate_walled(r, s);
        std::mt19937_64 rng(kDefaultSeed);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        for (int trial = 0; trial < 500; ++trial) {
            const auto& a = basis[pick(rng)];
            const auto& b = basis[pick(rng)];
            if (!check_pair(a, b)) {
                detail = a.serialize() + " * " + b.serialize();
                return false;
            }
        }
    }
    return true;
}

bool associativity(std::string& detail) {
    auto basis = enumerate_walled(2, 2);
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
        auto a = walled_element_of(basis[pick(rng)]);
        auto b = walled_element_of(basis[pick(rng)]);
        auto c = walled_element_of(basis[pick(rng)]);
        if (!(elem_mul(elem_mul(a, b), c) == elem_mul(a, elem_mul(b, c)))) {
            detail = "triple at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool duality_certifications(std::string& detail) {
    auto sergeev = verify_sergeev_duality(2, 2);
    bool ok = expect(sergeev.injective && sergeev.surjective && sergeev.algebra_dim == 8 &&
                         sergeev.all_checks_pass(),
                     "Sergeev duality (2,2)", detail);

    auto small = verify_mixed_duality(2, 1, 1);
    ok &= expect(small.injective && small.surjective && small.algebra_dim == 8 &&
                     !small.probabilistic && small.all_checks_pass(),
                 "mixed duality (2,1,1)", detail);

    auto large = verify_mixed_duality(3, 2, 1);
    ok &= expect(large.injective && large.surjective && large.algebra_dim == 48 &&
                     large.probabilistic && large.all_checks_pass(),
                 "mixed duality (3,2,1)", detail);

    auto degenerate = verify_mixed_duality(1, 1, 1);
    ok &= expect(degenerate.surjective &&
                     degenerate.image_rank == degenerate.centralizer_total() &&
                     degenerate.all_checks_pass(),
                 "mixed duality (1,1,1) surjectivity", detail);
    // Stated expectation: not injective at (1,1,1). The exact computation
    // gives image_rank = centralizer = algebra_dim = 8 (the two-strand
    // algebra is simple, so its action is faithful for every n >= 1;
    // non-injectivity first occurs at three strands, e.g. n = 1, (2,1)).
    ok &= expect(!degenerate.injective,
                 "(1,1,1) expected non-injective, computed bijective: image_rank = " +
                     std::to_string(degenerate.image_rank) + " = centralizer total = " +
                     std::to_string(degenerate.centralizer_total()),
                 detail);
    return ok;
}

bool relation_checks(std::string& detail) {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        auto report = check_presentation_relations(r, s);
        for (const auto& rel : report.relations) {
            if (!rel.pass) {
                detail = rel.name;
                return false;
            }
        }
    }
    // Matrix forms of the centralizer relations at n = 2; the (3,2) run needs
    // the guard lifted to dimension 4^5.
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        for (const auto& entry : verify_centralizer_relations(2, r, s, 1100)) {
            if (!entry.pass) {
                detail = entry.name;
                return false;
            }
        }
    }
    return true;
}

bool basis_form_round_trip(std::string& detail) {
    for (const auto& d : enumerate_walled(2, 2)) {
        auto form = decompose_to_basis_form(d);
        if (!(eval_basis_form(form) == walled_element_of(d))) {
            detail = d.serialize();
            return false;
        }
    }
    return true;
}

bool zero_products(std::string& detail) {
    bool ok = true;
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
        ok &= expect(eval_word(parse_word("e e", r, s)).is_zero(),
                     "e^2 diagram at (" + std::to_string(r) + "," + std::to_string(s) + ")",
                     detail);
        std::string word = "e c" + std::to_string(r) + " e";
        ok &= expect(eval_word(parse_word(word, r, s)).is_zero(),
                     "e c_r e diagram at (" + std::to_string(r) + "," + std::to_string(s) + ")",
                     detail);
    }
    const int n = 2;
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
        auto e = psi_matrix(generator(r, s, {GenKind::E, 0}), n);
        auto cr = psi_matrix(generator(r, s, {GenKind::C, r}), n);
        ok &= expect(mat_mul(e, e).is_zero(), "e^2 matrix", detail);
        ok &= expect(mat_mul(e, mat_mul(cr, e)).is_zero(), "e c_r e matrix", detail);
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "dimension counts (1,1),(2,1),(1,2),(2,2)", dimension_counts},
        {2, "Sergeev homomorphism, exhaustive k = 2, 3", sergeev_homomorphism},
        {3, "worked sign examples (rho,ell) and (c,l1,r1,p1,l2,r2,p2)", worked_sign_examples},
        {4, "diagram action = word action, k <= 3, n = 2", word_action_equality},
        {5, "weight examples: pictured diagrams at n = 2", weight_examples},
        {6, "supercommutation with q(2) at (1,1) and (2,1)", supercommutation},
        {7, "flip square at (1,1) and (2,1), n = 2", flip_square},
        {8, "mixed homomorphism: exhaustive (1,1), sampled (2,1),(2,2)", mixed_homomorphism},
        {9, "associativity: 1000 seeded triples at (2,2)", associativity},
        {10, "duality certifications (2,2)k, (2,1,1), (3,2,1), (1,1,1)", duality_certifications},
        {11, "centralizer + presentation relations at (2,2),(3,2)", relation_checks},
        {12, "basis-form round trip over all 384 diagrams at (2,2)", basis_form_round_trip},
        {13, "zero products e^2 and e c_r e, diagrams and matrices", zero_products},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", criterion.id,
                    criterion.title.c_str(), seconds, detail.empty() ? "" : " -- ",
                    detail.c_str());
        if (!pass) ++failures;
    }
    return failures;
}
