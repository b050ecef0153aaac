#include "wbs/diagram.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace wbs;
using VP = std::pair<Vertex, Vertex>;

TEST_CASE("k-superdiagram construction and validation") {
    auto d = new_k_diagram(5, {3, 1, 5, 2, 4}, {1, 4, 5});
    CHECK(d.parity() == 1);
    CHECK(d.marked == std::set<int>{1, 4, 5});

    auto id3 = new_k_diagram(3, {1, 2, 3}, {});
    CHECK(id3.parity() == 0);
    CHECK(id3.is_identity_perm());

    CHECK_THROWS_WITH_AS(new_k_diagram(2, {1, 1}, {}),
                         "not a permutation: bottom vertex 1 used twice", std::invalid_argument);
    CHECK_THROWS_AS(new_k_diagram(2, {1, 2}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(new_k_diagram(2, {1}, {}), std::invalid_argument);
}

TEST_CASE("walled diagram construction and wall rules") {
    auto e12 = new_walled(1, 1, {VP{top_vertex(1), top_vertex(2)}, VP{bot_vertex(1), bot_vertex(2)}},
                          {});
    CHECK(e12 == generator(1, 1, {GenKind::E, 0}));
    CHECK(e12.parity() == 0);

    auto c1 = new_walled(2, 0, {VP{top_vertex(1), bot_vertex(1)}, VP{top_vertex(2), bot_vertex(2)}},
                         {VP{top_vertex(1), bot_vertex(1)}});
    CHECK(c1.parity() == 1);
    CHECK(c1 == generator(2, 0, {GenKind::C, 1}));

    CHECK_THROWS_AS(
        new_walled(1, 1, {VP{top_vertex(1), bot_vertex(2)}, VP{top_vertex(2), bot_vertex(1)}}, {}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        new_walled(2, 0, {VP{top_vertex(1), top_vertex(2)}, VP{bot_vertex(1), bot_vertex(2)}}, {}),
        std::invalid_argument);
    CHECK_THROWS_AS(new_walled(1, 1,
                               {VP{top_vertex(1), bot_vertex(1)}, VP{top_vertex(2), bot_vertex(2)}},
                               {VP{top_vertex(1), top_vertex(2)}}),
                    std::invalid_argument);
    // Degree violation: t1 used twice.
    CHECK_THROWS_AS(
        new_walled(1, 1, {VP{top_vertex(1), bot_vertex(1)}, VP{top_vertex(1), bot_vertex(2)}}, {}),
        std::invalid_argument);
}

TEST_CASE("enumeration counts match 2^m m!") {
    CHECK(enumerate_walled(1, 1).size() == 8);
    CHECK(enumerate_walled(2, 1).size() == 48);
    CHECK(enumerate_walled(1, 2).size() == 48);
    CHECK(enumerate_walled(2, 2).size() == 384);
    CHECK(enumerate_walled(3, 2).size() == 3840);
    CHECK(enumerate_walled(1, 0).size() == 2);
    CHECK(enumerate_k(1).size() == 2);
    CHECK(enumerate_k(2).size() == 8);
    CHECK(enumerate_k(3).size() == 48);
    CHECK_THROWS_AS(enumerate_walled(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_k(7), std::invalid_argument);
}

TEST_CASE("enumeration is canonically ordered and duplicate-free") {
    auto all = enumerate_walled(2, 1);
    std::set<std::string> seen;
    std::string prev;
    for (const auto& d : all) {
        std::string key = d.serialize();
        CHECK(prev < key);
        prev = key;
        seen.insert(key);
        CHECK(d.size() == 3);
    }
    CHECK(seen.size() == all.size());
}

TEST_CASE("generators") {
    auto c3 = generator(2, 1, {GenKind::C, 3});
    CHECK(c3.edge_at(top_vertex(3)).marked);
    CHECK_FALSE(c3.edge_at(top_vertex(1)).marked);

    CHECK_THROWS_AS(generator(2, 1, {GenKind::S, 2}), std::invalid_argument);
    CHECK_THROWS_AS(generator(2, 0, {GenKind::E, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generator(2, 1, {GenKind::C, 4}), std::invalid_argument);

    auto s1 = generator(2, 1, {GenKind::S, 1});
    CHECK(s1.edge_at(top_vertex(1)).bot_col() == 2);
    CHECK(s1.edge_at(top_vertex(3)).bot_col() == 3);
}

TEST_CASE("flip moves right-of-wall columns only") {
    // The identity strand t2-b2 sits right of the wall; swapping its two
    // endpoints returns the same vertical edge, so the identity is fixed.
    CHECK(flip(identity_k(2), 1, 1) == identity_walled(1, 1));

    // The swap diagram becomes the cup/cap pair.
    auto swapped = new_k_diagram(2, {2, 1}, {});
    CHECK(flip(swapped, 1, 1) == generator(1, 1, {GenKind::E, 0}));

    // Marks travel with their edges.
    auto marked_swap = new_k_diagram(2, {2, 1}, {1});
    auto image = flip(marked_swap, 1, 1);
    CHECK(image.edge_at(top_vertex(1)).marked);
    CHECK_FALSE(image.edge_at(bot_vertex(1)).marked);
}

TEST_CASE("flip reproduces the pictured (3,2)-superdiagram") {
    auto preimage = new_k_diagram(5, {3, 5, 1, 2, 4}, {2, 3, 4});
    auto d1 = flip(preimage, 3, 2);
    std::vector<WalledEdge> expected = {
        WalledEdge(top_vertex(1), bot_vertex(3), false),
        WalledEdge(top_vertex(3), bot_vertex(1), true),
        WalledEdge(top_vertex(4), bot_vertex(5), false),
        WalledEdge(top_vertex(2), top_vertex(5), true),
        WalledEdge(bot_vertex(2), bot_vertex(4), true),
    };
    std::sort(expected.begin(), expected.end());
    CHECK(d1.edges == expected);
}

TEST_CASE("flip is a parity-preserving bijection onto the walled basis") {
    auto walled = enumerate_walled(2, 1);
    std::set<std::string> images;
    for (const auto& d : enumerate_k(3)) {
        auto f = flip(d, 2, 1);
        CHECK(f.parity() == d.parity());
        images.insert(f.serialize());
    }
    CHECK(images.size() == 48);
    for (const auto& d : walled) CHECK(images.count(d.serialize()) == 1);
}
