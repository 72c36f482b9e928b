#include <doctest.h>

#include <vector>

#include "symtree/errors.hpp"
#include "symtree/tree.hpp"

using namespace symtree;

TEST_CASE("perfect binary tree of depth 2") {
    const Tree t = build_perfect_tree(2, 2);
    REQUIRE(t.vertex_count() == 7);
    CHECK(t.height() == 2);
    CHECK(t.is_perfect());

    const std::vector<Vertex> parents = {-1, 0, 0, 1, 1, 2, 2};
    for (Vertex v = 1; v < 7; ++v) CHECK(t.parent(v) == parents[std::size_t(v)]);

    CHECK(t.depth(0) == 0);
    CHECK(t.depth(2) == 1);
    CHECK(t.depth(6) == 2);

    REQUIRE(t.children(0).size() == 2);
    CHECK(t.children(0)[0] == 1);
    CHECK(t.children(0)[1] == 2);
    CHECK(t.children(1)[0] == 3);
    CHECK(t.children(6).empty());
    CHECK(t.is_leaf(3));
    CHECK(!t.is_leaf(1));

    CHECK(t.leaves() == std::vector<Vertex>{3, 4, 5, 6});

    const auto* shape = std::get_if<PerfectShape>(&t.shape());
    REQUIRE(shape != nullptr);
    CHECK(shape->k == 2);
    CHECK(shape->n == 2);
}

TEST_CASE("perfect tree vertex counts") {
    CHECK(build_perfect_tree(3, 1).vertex_count() == 4);
    CHECK(build_perfect_tree(3, 2).vertex_count() == 13);
    CHECK(build_perfect_tree(2, 3).vertex_count() == 15);
    CHECK(build_perfect_tree(5, 4).vertex_count() == 781);
}

TEST_CASE("perfect tree rejects degenerate parameters") {
    CHECK_THROWS_AS(build_perfect_tree(1, 2), DomainError);
    CHECK_THROWS_AS(build_perfect_tree(0, 2), DomainError);
    CHECK_THROWS_AS(build_perfect_tree(2, 0), DomainError);
    CHECK_THROWS_AS(build_perfect_tree(2, -1), DomainError);
}

TEST_CASE("perfect tree vertex budget") {
    // 2^20 - 1 vertices just exceeds the default budget
    CHECK_THROWS_AS(build_perfect_tree(2, 19), BudgetExceeded);
    CHECK(build_perfect_tree(2, 19, 2'000'000).vertex_count() == 1048575);
    CHECK_THROWS_AS(build_perfect_tree(2, 2, 0), DomainError);
}

TEST_CASE("kpode layout is level major") {
    const Tree t = build_kpode({1, 2});
    REQUIRE(t.vertex_count() == 4);
    CHECK(t.parent(1) == 0);
    CHECK(t.parent(2) == 0);
    CHECK(t.parent(3) == 2);
    CHECK(t.depth(3) == 2);
    CHECK(t.height() == 2);
    CHECK(t.leaves() == std::vector<Vertex>{1, 3});
    CHECK(!t.is_perfect());

    const Tree u = build_kpode({3, 3, 3});
    REQUIRE(u.vertex_count() == 10);
    // level p holds vertices 3p-2 .. 3p, one per arm
    CHECK(u.parent(4) == 1);
    CHECK(u.parent(5) == 2);
    CHECK(u.parent(9) == 6);
    CHECK(u.depth(9) == 3);
    CHECK(u.children(0).size() == 3);
    CHECK(u.leaves() == std::vector<Vertex>{7, 8, 9});

    // a short arm drops out of later levels
    const Tree w = build_kpode({1, 3});
    REQUIRE(w.vertex_count() == 5);
    CHECK(w.parent(3) == 2);
    CHECK(w.parent(4) == 3);
}

TEST_CASE("kpode rejects degenerate parameters") {
    CHECK_THROWS_AS(build_kpode({3}), DomainError);
    CHECK_THROWS_AS(build_kpode({}), DomainError);
    CHECK_THROWS_AS(build_kpode({2, 0}), DomainError);
    CHECK_THROWS_AS(build_kpode({2, -1, 2}), DomainError);
    CHECK_THROWS_AS(build_kpode({600'000, 600'000}), BudgetExceeded);
}

TEST_CASE("leafy subtree roots") {
    const Tree t = build_perfect_tree(3, 2);
    CHECK(leafy_subtree_roots(t, 2) == std::vector<Vertex>{0});
    CHECK(leafy_subtree_roots(t, 1) == std::vector<Vertex>{1, 2, 3});
    CHECK(leafy_subtree_roots(t, 0) == t.leaves());
    CHECK_THROWS_AS(leafy_subtree_roots(t, 3), DomainError);
    CHECK_THROWS_AS(leafy_subtree_roots(t, -1), DomainError);
    CHECK_THROWS_AS(leafy_subtree_roots(build_kpode({2, 2}), 1), DomainError);
}
