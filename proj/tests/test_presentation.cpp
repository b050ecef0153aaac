#include "wbs/presentation.hpp"
#include "wbs/json_io.hpp"

#include <doctest.h>

#include <set>

using namespace wbs;

TEST_CASE("word parsing and evaluation") {
    CHECK(eval_word(parse_word("", 1, 1)) == walled_element_of(identity_walled(1, 1)));
    CHECK(eval_word(parse_word("e e", 1, 1)).is_zero());
    CHECK(eval_word(parse_word("c2 e", 2, 2)) == eval_word(parse_word("c3 e", 2, 2)));

    CHECK_THROWS_AS(parse_word("s2", 2, 1), std::invalid_argument);   // crosses the wall
    CHECK_THROWS_AS(parse_word("x1", 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("c9", 1, 1), std::invalid_argument);
    CHECK(word_to_string(parse_word("s1 e c3", 2, 2)) == "s1 e c3");
}

TEST_CASE("e_pq word evaluates to the pictured diagram") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        for (int p = 1; p <= r; ++p) {
            for (int q = r + 1; q <= r + s; ++q) {
                CHECK(eval_word(e_pq_word(r, s, p, q)) ==
                      walled_element_of(e_pq_diagram(r, s, p, q)));
            }
        }
    }
}

TEST_CASE("presentation relations hold at (2,2) and (3,2)") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        auto report = check_presentation_relations(r, s);
        CHECK(!report.relations.empty());
        for (const auto& rel : report.relations) {
            INFO(rel.name);
            CHECK(rel.pass);
        }
    }
}

TEST_CASE("presentation relations at (1,1) hold on the admissible subset") {
    auto report = check_presentation_relations(1, 1);
    CHECK(report.all_pass());
    // No s-generators exist, so no braid or conjugation instances appear.
    for (const auto& rel : report.relations) {
        CHECK(rel.name.find("braid") == std::string::npos);
    }
}

TEST_CASE("one-sided shapes omit the horizontal generator") {
    auto report = check_presentation_relations(2, 0);
    CHECK(report.all_pass());
    for (const auto& rel : report.relations) {
        CHECK(rel.name.find("e") == std::string::npos);
    }
    CHECK_THROWS_AS(parse_word("e", 2, 0), std::invalid_argument);
    CHECK(eval_word(parse_word("c1 c1", 2, 0)) ==
          walled_element_of(identity_walled(2, 0)).scaled(-1));
}

TEST_CASE("sergeev relations in D_3") {
    auto report = check_sergeev_relations(3);
    CHECK(!report.relations.empty());
    for (const auto& rel : report.relations) {
        INFO(rel.name);
        CHECK(rel.pass);
    }
}

TEST_CASE("basis form of simple diagrams") {
    auto id_form = decompose_to_basis_form(identity_walled(2, 1));
    CHECK(id_form.P.empty());
    CHECK(id_form.pairs.empty());
    CHECK(id_form.Q.empty());
    CHECK(id_form.sigma == std::vector<int>{1, 2, 3});

    auto e_form = decompose_to_basis_form(generator(1, 1, {GenKind::E, 0}));
    CHECK(e_form.pairs == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(e_form.P.empty());
    CHECK(e_form.Q.empty());
    CHECK(e_form.sigma == std::vector<int>{1, 2});
}

TEST_CASE("basis form of the worked (3,3) diagrams") {
    using VP = std::pair<Vertex, Vertex>;
    auto d1 = new_walled(
        3, 3,
        {VP{top_vertex(1), bot_vertex(1)}, VP{top_vertex(3), bot_vertex(3)},
         VP{top_vertex(5), bot_vertex(4)}, VP{top_vertex(6), bot_vertex(6)},
         VP{top_vertex(2), top_vertex(4)}, VP{bot_vertex(2), bot_vertex(5)}},
        {VP{top_vertex(1), bot_vertex(1)}, VP{top_vertex(6), bot_vertex(6)},
         VP{top_vertex(2), top_vertex(4)}, VP{bot_vertex(2), bot_vertex(5)}});
    auto f1 = decompose_to_basis_form(d1);
    CHECK(f1.P == std::vector<int>{2});
    CHECK(f1.pairs == std::vector<std::pair<int, int>>{{2, 5}});
    CHECK(f1.sigma == std::vector<int>{1, 2, 3, 5, 4, 6});
    CHECK(f1.Q == std::vector<int>{1, 2, 6});
    CHECK(eval_basis_form(f1) == walled_element_of(d1));

    auto d2 = new_walled(
        3, 3,
        {VP{top_vertex(3), bot_vertex(2)}, VP{top_vertex(5), bot_vertex(5)},
         VP{top_vertex(1), top_vertex(6)}, VP{top_vertex(2), top_vertex(4)},
         VP{bot_vertex(3), bot_vertex(4)}, VP{bot_vertex(1), bot_vertex(6)}},
        {VP{top_vertex(1), top_vertex(6)}, VP{bot_vertex(3), bot_vertex(4)},
         VP{bot_vertex(1), bot_vertex(6)}});
    auto f2 = decompose_to_basis_form(d2);
    CHECK(f2.P == std::vector<int>{1, 3});
    CHECK(f2.pairs == std::vector<std::pair<int, int>>{{1, 6}, {3, 4}});
    CHECK(f2.sigma == std::vector<int>{1, 3, 2, 4, 5, 6});
    CHECK(f2.Q == std::vector<int>{1});
    CHECK(eval_basis_form(f2) == walled_element_of(d2));
}

TEST_CASE("worked (3,3) word factorization evaluates with sign +1") {
    // d1 = c_2 e_{2,5} s_4 c_1 c_2 c_6 as a generator word.
    GeneratorWord word{3, 3, {}};
    word.letters.push_back({GenKind::C, 2});
    auto epq = e_pq_word(3, 3, 2, 5);
    word.letters.insert(word.letters.end(), epq.letters.begin(), epq.letters.end());
    word.letters.push_back({GenKind::S, 4});
    word.letters.push_back({GenKind::C, 1});
    word.letters.push_back({GenKind::C, 2});
    word.letters.push_back({GenKind::C, 6});
    using VP = std::pair<Vertex, Vertex>;
    auto d1 = new_walled(
        3, 3,
        {VP{top_vertex(1), bot_vertex(1)}, VP{top_vertex(3), bot_vertex(3)},
         VP{top_vertex(5), bot_vertex(4)}, VP{top_vertex(6), bot_vertex(6)},
         VP{top_vertex(2), top_vertex(4)}, VP{bot_vertex(2), bot_vertex(5)}},
        {VP{top_vertex(1), bot_vertex(1)}, VP{top_vertex(6), bot_vertex(6)},
         VP{top_vertex(2), top_vertex(4)}, VP{bot_vertex(2), bot_vertex(5)}});
    CHECK(eval_word(word) == walled_element_of(d1));
}

TEST_CASE("presentation relations at one-sided shapes") {
    auto left_only = check_presentation_relations(3, 0);
    CHECK(left_only.all_pass());
    auto right_only = check_presentation_relations(0, 3);
    CHECK(right_only.all_pass());
    // Right of the wall the Clifford generators square to +1.
    bool saw_plus = false;
    for (const auto& rel : right_only.relations) {
        saw_plus |= rel.name.find("^2 = +1") != std::string::npos;
        CHECK(rel.name.find("^2 = -1") == std::string::npos);
    }
    CHECK(saw_plus);
}

TEST_CASE("basis form round trip is the identity with coefficient +1 at (2,2)") {
    std::set<std::string> forms;
    auto basis = enumerate_walled(2, 2);
    for (const auto& d : basis) {
        auto form = decompose_to_basis_form(d);
        auto evaluated = eval_basis_form(form);
        CHECK(evaluated == walled_element_of(d));
        forms.insert(basis_form_to_json(form));
    }
    CHECK(forms.size() == basis.size());
}

TEST_CASE("dimension formulas") {
    auto d11 = dim_formulas(1, 1);
    CHECK(d11.factorial_form == 8);
    CHECK(d11.sum_form == 8);
    auto d22 = dim_formulas(2, 2);
    CHECK(d22.factorial_form == 384);
    CHECK(d22.sum_form == 384);
    auto d03 = dim_formulas(0, 3);
    CHECK(d03.factorial_form == 48);
    CHECK(d03.sum_form == 48);
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {0, 3}}) {
        auto pair = dim_formulas(r, s);
        CHECK(pair.factorial_form == pair.sum_form);
        CHECK(pair.factorial_form == enumerate_walled(r, s).size());
    }
}
