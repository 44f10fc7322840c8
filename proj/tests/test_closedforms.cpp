#include <doctest.h>

#include <stdexcept>

#include "netbounds/closedforms.hpp"
#include "netbounds/counting.hpp"

using namespace netbounds;

TEST_SUITE_BEGIN("closedforms");

TEST_CASE("k1 closed form") {
    CHECK(k1_bound(3) == 0);
    CHECK(k1_bound(4) == 1);
    CHECK(k1_bound(8) == 165);
    CHECK(k1_bound(14) == 326876);
    CHECK_THROWS_AS(k1_bound(2), std::invalid_argument);
}

TEST_CASE("neighbour-free counts") {
    CHECK(neighbor_free_count(ChordDiagram::from_pairs(4, {{1, 2}, {3, 4}, {5, 6}})) == 0);
    CHECK(neighbor_free_count(ChordDiagram::from_pairs(4, {{1, 4}, {2, 3}, {5, 6}})) == 2);
    CHECK(neighbor_free_count(ChordDiagram::from_pairs(2, {{1, 2}})) == 0);

    std::int64_t total = 0;
    for (const ChordDiagram& g : enumerate_diagrams(4))
        total += neighbor_free_count(g);
    CHECK(total == 6);

    for (int d = 3; d <= 7; ++d) {
        std::int64_t sum = 0;
        for (const ChordDiagram& g : enumerate_diagrams(d))
            sum += neighbor_free_count(g);
        CHECK(sum == (2 * d - 2) * k1_bound(d));
    }
}

TEST_CASE("per-net V at k=1 equals the neighbour-free count") {
    for (int d = 3; d <= 6; ++d)
        for (const ChordDiagram& g : enumerate_diagrams(d))
            CHECK(v_of_net(g, 1) == neighbor_free_count(g));
}

TEST_CASE("N_j values") {
    CHECK(nk(5, 3) == 0);
    CHECK(nk(8, 4) == 1);
    for (int d = 4; d <= 12; ++d)
        CHECK(nk(d, 2) == catalan_u(d - 2));
    CHECK_THROWS_AS(nk(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(nk(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(nk(3, 2), std::invalid_argument);
}

TEST_CASE("closed forms agree with enumeration") {
    for (int d = 4; d <= 10; ++d)
        for (int j = 2; j <= std::min(6, d - 2); ++j)
            CHECK(nk(d, j) == nk_enumerated(d, j));
    // enumeration is the only route past j = 6
    CHECK(nk(10, 7) == nk_enumerated(10, 7));
}

TEST_CASE("script-N values") {
    CHECK(script_n(4) == 1);
    CHECK(script_n(5) == 2);
    CHECK(script_n(6) == 6);
    CHECK(script_n(7) == 18);
    CHECK(script_n(8) == 57);
    for (int d = 4; d <= 10; ++d)
        CHECK(script_n(d) == script_n_enumerated(d));
}

TEST_CASE("script-N equals the computed k=2 bound") {
    for (int d = 4; d <= 7; ++d)
        CHECK(script_n(d) == lower_bound(d, 2).bound);
}

TEST_SUITE_END();
