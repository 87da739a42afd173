#include <doctest.h>

#include <map>

#include "hypercat/combinatorics.hpp"
#include "hypercat/oracle.hpp"

using namespace hypercat;

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Natural("2432902008176640000"));
}

TEST_CASE("block multinomial") {
    CHECK(block_multinomial(0, 3) == 1);
    CHECK(block_multinomial(2, 2) == 6);
    CHECK(block_multinomial(3, 2) == 90);
}

TEST_CASE("block multinomial times (k!)^i recovers (ik)!") {
    for (unsigned long i = 0; i <= 6; ++i) {
        for (unsigned long k = 1; k <= 5; ++k) {
            Natural power;
            Natural kfact = factorial(k);
            mpz_pow_ui(power.get_mpz_t(), kfact.get_mpz_t(), i);
            CHECK(block_multinomial(i, k) * power == factorial(i * k));
        }
    }
}

TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(6) == 132);
}

TEST_CASE("profile iteration: forced cases") {
    auto p22 = profiles(2, 2);
    REQUIRE(p22.size() == 1);
    CHECK(p22[0].counts.empty());
    CHECK(p22[0].leaf_count() == 2);

    auto p21 = profiles(2, 1);
    REQUIRE(p21.size() == 1);
    CHECK(p21[0].counts == std::map<unsigned long, unsigned long>{{1, 1}});
    CHECK(p21[0].leaf_count() == 1);
}

TEST_CASE("profile iteration: partitions of 3 in reverse-lexicographic order") {
    auto p41 = profiles(4, 1);
    REQUIRE(p41.size() == 3);
    CHECK(p41[0].counts == std::map<unsigned long, unsigned long>{{3, 1}});
    CHECK(p41[1].counts == std::map<unsigned long, unsigned long>{{2, 1}, {1, 1}});
    CHECK(p41[2].counts == std::map<unsigned long, unsigned long>{{1, 3}});
    CHECK(p41[0].leaf_count() == 3);
    CHECK(p41[1].leaf_count() == 2);
    CHECK(p41[2].leaf_count() == 1);
}

namespace {

unsigned long partition_count(unsigned long n, unsigned long max_part) {
    if (n == 0)
        return 1;
    unsigned long total = 0;
    for (unsigned long p = std::min(n, max_part); p >= 1; --p)
        total += partition_count(n - p, p);
    return total;
}

}  // namespace

TEST_CASE("profile stream length equals the partition count of n-l") {
    for (unsigned long n = 1; n <= 10; ++n) {
        for (unsigned long l = 1; l <= n; ++l) {
            unsigned long seen = 0;
            for_each_profile(n, l, [&](const DegreeProfile& p) {
                CHECK(p.valid());
                ++seen;
            });
            CHECK(seen == partition_count(n - l, n - l == 0 ? 1 : n - l));
        }
    }
}

TEST_CASE("tree counts for small profiles") {
    CHECK(tree_count({2, 2, {}}) == 1);
    CHECK(tree_count({2, 1, {{1, 1}}}) == 1);
    CHECK(tree_count({3, 2, {{1, 1}}}) == 2);
}

TEST_CASE("tree counts sum to plane-tree counts by root degree") {
    for (unsigned long n = 1; n <= 8; ++n) {
        std::map<unsigned long, Natural> by_degree;
        for_each_plane_tree(n + 1, [&](const PlaneTree& tree) {
            ++by_degree[tree.outdegrees[0]];
        });
        Natural total = 0;
        for (unsigned long l = 1; l <= n; ++l) {
            Natural sum = 0;
            for_each_profile(n, l, [&](const DegreeProfile& p) { sum += tree_count(p); });
            CHECK(sum == by_degree[l]);
            total += sum;
        }
        CHECK(total == catalan(n));
    }
}
