#include <doctest.h>

#include <cstdlib>

#include "hypercat/closed_form.hpp"
#include "hypercat/series.hpp"

using namespace hypercat;

TEST_CASE("departure counts") {
    for (unsigned long k = 1; k <= 5; ++k)
        CHECK(departure_count(1, k) == 1);
    CHECK(departure_count(2, 2) == 3);
    CHECK(departure_count(3, 2) == 15);
}

TEST_CASE("tours on a profile") {
    CHECK(tours_on_profile({1, 1, {}}, 4) == 1);
    CHECK(tours_on_profile({2, 2, {}}, 2) == 3);
    CHECK(tours_on_profile({3, 1, {{2, 1}}}, 2) == 15);
}

TEST_CASE("small hypergraph Catalan numbers") {
    CHECK(hypergraph_catalan_closed(0, 3) == 1);
    CHECK(hypergraph_catalan_closed(1, 5) == 1);
    CHECK(hypergraph_catalan_closed(2, 2) == 6);
    CHECK(hypergraph_catalan_closed(3, 2) == 57);
}

TEST_CASE("k=1 collapses to the Catalan numbers") {
    for (unsigned long n = 0; n <= 20; ++n)
        CHECK(hypergraph_catalan_closed(n, 1) == catalan(n));
}

TEST_CASE("two-edge identity c_2 = binom(2k,k)") {
    for (unsigned long k = 1; k <= 12; ++k)
        CHECK(hypergraph_catalan_closed(2, k) == binomial(2 * k, k));
}

TEST_CASE("every summand is a positive integer") {
    for (unsigned long n = 1; n <= 8; ++n) {
        for (unsigned long l = 1; l <= n; ++l) {
            for_each_profile(n, l, [&](const DegreeProfile& p) {
                CHECK(tree_count(p) * tours_on_profile(p, 3) > 0);
            });
        }
    }
}

TEST_CASE("closed form agrees with series and Lagrange extraction") {
    for (unsigned long k = 1; k <= 5; ++k) {
        const unsigned long max_n = k <= 2 ? 40 : 25;
        const TruncatedSeries c = ck_series(k, max_n + 1);
        for (unsigned long n = 1; n <= max_n; ++n) {
            const Natural closed = hypergraph_catalan_closed(n, k);
            CHECK(closed == c.natural_coeff(n + 1));
            CHECK(closed == lagrange_extract(n, k));
        }
    }
}

TEST_CASE("parallel reduction matches the serial sum") {
    const Natural serial = hypergraph_catalan_closed(20, 2);
    setenv("HYPERCAT_THREADS", "4", 1);
    CHECK(configured_thread_count() == 4);
    CHECK(hypergraph_catalan_closed(20, 2) == serial);
    unsetenv("HYPERCAT_THREADS");
}
