#include <doctest.h>

#include <algorithm>
#include <set>

#include "hypercat/closed_form.hpp"
#include "hypercat/oracle.hpp"

using namespace hypercat;

TEST_CASE("plane tree enumeration counts") {
    CHECK(count_plane_trees(1) == 1);
    CHECK(count_plane_trees(4) == 5);
    CHECK(count_plane_trees(8) == 429);
    for (std::size_t v = 1; v <= 9; ++v)
        CHECK(count_plane_trees(v) == catalan(v - 1));
}

TEST_CASE("enumerated trees are distinct and valid") {
    std::set<std::vector<unsigned>> seen;
    for_each_plane_tree(6, [&](const PlaneTree& tree) {
        CHECK(tree.valid());
        CHECK(seen.insert(tree.outdegrees).second);
    });
    CHECK(seen.size() == 42);
}

TEST_CASE("tours on specific trees") {
    const PlaneTree edge{{1, 0}};
    for (unsigned long k = 1; k <= 4; ++k)
        CHECK(tours_on_tree(edge, k) == 1);

    const PlaneTree star4{{3, 0, 0, 0}};  // 4-vertex star rooted at the center
    CHECK(tours_on_tree(star4, 2) == 15);

    const PlaneTree path4{{1, 1, 1, 0}};  // 4-vertex path rooted at an end
    CHECK(tours_on_tree(path4, 2) == 9);
}

TEST_CASE("tree-sum oracle") {
    CHECK(oracle_by_trees(3, 2) == 57);
    CHECK(oracle_by_trees(2, 3) == 20);
    for (unsigned long n = 0; n <= 8; ++n)
        CHECK(oracle_by_trees(n, 1) == catalan(n));
}

TEST_CASE("tours_on_tree matches tours_on_profile through the profile") {
    for (std::size_t v = 2; v <= 6; ++v) {
        for_each_plane_tree(v, [&](const PlaneTree& tree) {
            CHECK(tours_on_tree(tree, 3) == tours_on_profile(tree.profile(), 3));
        });
    }
}

TEST_CASE("brute-force walk counts") {
    for (unsigned long k = 1; k <= 4; ++k)
        CHECK(brute_force_walks(1, k) == 1);
    CHECK(brute_force_walks(2, 2) == 6);
    CHECK(brute_force_walks(3, 2) == 57);
    CHECK_THROWS_AS(brute_force_walks(5, 2), std::invalid_argument);
}

TEST_CASE("every enumerated tour has length 2kn") {
    for (unsigned long k = 1; k <= 3; ++k) {
        for (unsigned long n = 1; k * n <= 6; ++n) {
            brute_force_walks(n, k, 6, [&](const Walk& walk) {
                CHECK(walk.size() == 2 * k * n);
                CHECK(walk[0] == 0);
            });
        }
    }
}

TEST_CASE("decompose on hand walks") {
    const auto [edge_tree, edge_seqs] = decompose_walk({0, 1, 0, 1}, 2);
    CHECK(edge_tree.outdegrees == std::vector<unsigned>{1, 0});
    CHECK(edge_seqs[0] == std::deque<unsigned>{1, 1});
    CHECK(edge_seqs[1] == std::deque<unsigned>{0, 0});

    const auto [cherry, seqs] = decompose_walk({0, 1, 0, 2, 0, 1, 0, 2}, 2);
    CHECK(cherry.outdegrees == std::vector<unsigned>{2, 0, 0});
    CHECK(seqs[0] == std::deque<unsigned>{1, 2, 1, 2});
}

TEST_CASE("decompose rejects non-tours with a named condition") {
    CHECK_THROWS_WITH_AS(decompose_walk({0, 1, 0, 1, 0, 1}, 2),
                         doctest::Contains("exactly k times"), std::invalid_argument);
    // 0-1, 0-2, then a chord 1-2 closing a cycle
    CHECK_THROWS_WITH_AS(decompose_walk({0, 1, 0, 2, 1, 2, 0, 1}, 2),
                         doctest::Contains("not a tree"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(decompose_walk({0, 2, 0, 1, 0, 2, 0, 1}, 2),
                         doctest::Contains("discovery order"), std::invalid_argument);
}

TEST_CASE("reconstruct on hand sequences") {
    const PlaneTree edge{{1, 0}};
    DepartureSequences edge_seqs = {{1, 1}, {0, 0}};
    CHECK(reconstruct_walk(edge, std::move(edge_seqs)) == Walk{0, 1, 0, 1});

    const PlaneTree star{{2, 0, 0}};
    DepartureSequences star_seqs = {{1, 2, 2, 1}, {0, 0}, {0, 0}};
    CHECK(reconstruct_walk(star, std::move(star_seqs)) == Walk{0, 1, 0, 2, 0, 2, 0, 1});
}

TEST_CASE("reconstruct rejects broken sequences") {
    const PlaneTree edge{{1, 0}};
    DepartureSequences stuck = {{1}, {}};  // exhausts at vertex 1
    CHECK_THROWS_WITH_AS(reconstruct_walk(edge, std::move(stuck)),
                         doctest::Contains("non-root"), std::invalid_argument);

    const PlaneTree star{{2, 0, 0}};
    DepartureSequences leftover = {{1, 1}, {0, 0}, {0, 0}};
    CHECK_THROWS_WITH_AS(reconstruct_walk(star, std::move(leftover)),
                         doctest::Contains("remaining"), std::invalid_argument);
}

TEST_CASE("round trip is the identity on every enumerated tour") {
    for (unsigned long k = 1; k <= 4; ++k) {
        for (unsigned long n = 1; k * n <= 4; ++n) {
            brute_force_walks(n, k, 4, [&](const Walk& walk) {
                auto [tree, seqs] = decompose_walk(walk, k);
                CHECK(reconstruct_walk(tree, std::move(seqs)) == walk);
            });
        }
    }
}

namespace {

// Independent count of admissible departure sequences at one vertex:
// permutations of the multiset (each neighbor k times) with the parent last
// and the children first seen in plane order.
unsigned long admissible_sequences(const std::vector<unsigned>& children, int parent,
                                   unsigned long k) {
    std::vector<unsigned> slots;
    for (unsigned c : children)
        for (unsigned long i = 0; i < k; ++i)
            slots.push_back(c);
    if (parent >= 0)
        for (unsigned long i = 0; i < k; ++i)
            slots.push_back(static_cast<unsigned>(parent));
    std::sort(slots.begin(), slots.end());
    unsigned long count = 0;
    do {
        if (parent >= 0 && slots.back() != static_cast<unsigned>(parent))
            continue;
        std::vector<unsigned> first_seen;
        for (unsigned v : slots)
            if (std::find(first_seen.begin(), first_seen.end(), v) == first_seen.end())
                first_seen.push_back(v);
        if (parent >= 0)
            first_seen.erase(std::find(first_seen.begin(), first_seen.end(),
                                       static_cast<unsigned>(parent)));
        if (first_seen == children)
            ++count;
    } while (std::next_permutation(slots.begin(), slots.end()));
    return count == 0 && slots.empty() ? 1 : count;
}

}  // namespace

TEST_CASE("admissible sequence assignments match the tour count per tree") {
    for (std::size_t v = 2; v <= 5; ++v) {
        for_each_plane_tree(v, [&](const PlaneTree& tree) {
            const auto kids = tree.children();
            const auto parent = tree.parents();
            Natural product = 1;
            for (unsigned vertex = 0; vertex < tree.vertex_count(); ++vertex)
                product *= admissible_sequences(kids[vertex], parent[vertex], 2);
            CHECK(product == tours_on_tree(tree, 2));
        });
    }
}
