#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "netbounds/arcs.hpp"
#include "netbounds/diagrams.hpp"
#include "netbounds/trajectory.hpp"

using namespace netbounds;

TEST_SUITE_BEGIN("arcs");

TEST_CASE("eight-vertex closed arc") {
    // Arc (r,s) with eight vertices whose internal chords, in arc indices,
    // are {1-2, 3-8, 4-5, 6-7}.
    const auto g = ChordDiagram::from_pairs(6, {{1, 2}, {3, 4}, {5, 10}, {6, 7}, {8, 9}});
    const TrajectoryState st = initial_state(g, 8);
    const ArcTableau t = arc_tableau(st, Arc::RS);
    CHECK(t.n == 8);
    CHECK(t.second_row == std::vector<int>{2, 5, 7, 8});
    CHECK(t.even_second == 2);
    CHECK(t.odd_second == 2);
    CHECK(t.exiting == 0);
    CHECK(t.segments == std::vector<std::pair<int, int>>{{2, 2}});
}

TEST_CASE("three-vertex arc with one exit") {
    const auto g = ChordDiagram::from_pairs(4, {{1, 4}, {2, 3}, {5, 6}});
    const TrajectoryState st = initial_state(g, 3);
    const ArcTableau t = arc_tableau(st, Arc::RS);
    CHECK(t.n == 3);
    CHECK(t.second_row == std::vector<int>{3});
    CHECK(t.even_second == 0);
    CHECK(t.odd_second == 1);
    CHECK(t.exiting == 1);
    CHECK(t.segments == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}});
}

TEST_CASE("empty vertex list gives the empty tableau") {
    const auto g = ChordDiagram::from_pairs(3, {{1, 2}, {3, 4}});
    const TrajectoryState st = initial_state(g, 1);
    ArcTableau t;
    arc_tableau_over({}, st, t);
    CHECK(t.n == 0);
    CHECK(t.even_second == 0);
    CHECK(t.odd_second == 0);
    CHECK(t.exiting == 0);
    CHECK(t.first_row.empty());
    CHECK(t.segments == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("n = 2(E+O) + m on every reachable tableau") {
    // The identity is asserted inside arc_tableau; walking full trajectories
    // exercises it over every reachable configuration.
    for (int d = 3; d <= 6; ++d) {
        for (const ChordDiagram& g : enumerate_diagrams(d)) {
            for (int k = 1; k <= 2 * d - 4; ++k) {
                TrajectoryState st = initial_state(g, k);
                for (int e = 0; e < (2 * d - 2) * (2 * d - 1); ++e) {
                    const ArcTableau rs = arc_tableau(st, Arc::RS);
                    const ArcTableau sr = arc_tableau(st, Arc::SR);
                    REQUIRE(rs.n + sr.n == 2 * d - 2);
                    advance(st);
                }
            }
        }
    }
}

TEST_CASE("degenerate tableau for the double point alone in the arc") {
    // k=1 layout where the moving vertex is about to cross the single (r,s)
    // vertex and both chords at the coincidence leave the arc.
    const auto g = ChordDiagram::from_pairs(3, {{1, 4}, {2, 3}});
    TrajectoryState st = initial_state(g, 1);
    advance(st);  // cross F1 (rewires)
    advance(st);  // cross F2
    advance(st);  // cross r
    REQUIRE(st.moving_in_rs());
    REQUIRE(st.next_crossing_vertex() == 3);
    const auto [t, parity] = degenerate_arc_tableau(st, 3, Arc::RS);
    CHECK(t.n == 2);
    CHECK(t.even_second == 0);
    CHECK(t.odd_second == 0);
    CHECK(t.exiting == 2);
    CHECK(parity == Parity::Even);
}

TEST_CASE("degenerate tableau with an exiting vertex on each side") {
    // Search d=5, k=3 trajectories for a both-exit coincidence flanked by
    // one simple exiting vertex on each side: n=4, m=4, double point at
    // indices 2,3, parity odd.
    bool found = false;
    for (const ChordDiagram& g : enumerate_diagrams(5)) {
        TrajectoryState st = initial_state(g, 3);
        for (int e = 0; e < (2 * 5 - 2) * (2 * 5 - 1) && !found; ++e) {
            const int y = st.next_crossing_vertex();
            if (y != 0 && st.partner_of(TrajectoryState::kMovingVertex) != y &&
                st.in_arc(y, Arc::RS) && st.moving_in_rs()) {
                const int a = st.partner_of(TrajectoryState::kMovingVertex);
                const int b = st.partner_of(y);
                if (!st.in_arc(a, Arc::RS) && !st.in_arc(b, Arc::RS)) {
                    std::vector<int> vertices;
                    st.arc_vertices(Arc::RS, vertices);
                    const bool double_in_middle =
                        vertices.size() == 4 && vertices[1] == TrajectoryState::kMovingVertex;
                    const auto [t, parity] = degenerate_arc_tableau(st, y, Arc::RS);
                    if (t.n == 4 && t.exiting == 4 && double_in_middle) {
                        CHECK(t.even_second == 0);
                        CHECK(t.odd_second == 0);
                        CHECK(parity == Parity::Odd);
                        found = true;
                    }
                }
            }
            advance(st);
        }
        if (found)
            break;
    }
    CHECK(found);
}

TEST_CASE("degenerate tableau matches both adjacent sub-configurations") {
    for (int d = 3; d <= 5; ++d) {
        for (const ChordDiagram& g : enumerate_diagrams(d)) {
            for (int k = 1; k <= 2 * d - 4; ++k) {
                TrajectoryState st = initial_state(g, k);
                for (int e = 0; e < (2 * d - 2) * (2 * d - 1); ++e) {
                    const int y = st.next_crossing_vertex();
                    bool deg = false;
                    Arc arc = Arc::RS;
                    ArcTableau before;
                    if (y != 0 && st.partner_of(TrajectoryState::kMovingVertex) != y) {
                        arc = st.moving_in_rs() ? Arc::RS : Arc::SR;
                        const int a = st.partner_of(TrajectoryState::kMovingVertex);
                        const int b = st.partner_of(y);
                        if (!st.in_arc(a, arc) && !st.in_arc(b, arc)) {
                            deg = true;
                            before = degenerate_arc_tableau(st, y, arc).first;
                        }
                    }
                    advance(st);
                    if (deg)
                        REQUIRE(arc_tableau(st, arc) == before);
                }
            }
        }
    }
}

TEST_CASE("degenerate_arc_tableau rejects ineligible calls") {
    const auto g = ChordDiagram::from_pairs(3, {{1, 2}, {3, 4}});
    TrajectoryState st = initial_state(g, 1);
    // next crossing is F1 = the moving vertex's own partner: degree 2
    CHECK_THROWS_AS(degenerate_arc_tableau(st, 1, Arc::SR), std::invalid_argument);
    // F2 is not the next crossing
    CHECK_THROWS_AS(degenerate_arc_tableau(st, 2, Arc::SR), std::invalid_argument);
    // not a fixed vertex at all
    CHECK_THROWS_AS(degenerate_arc_tableau(st, 9, Arc::SR), std::invalid_argument);

    // one chord stays inside the arc
    const auto h = ChordDiagram::from_pairs(4, {{1, 4}, {2, 3}, {5, 6}});
    TrajectoryState st2 = initial_state(h, 1);
    REQUIRE(st2.next_crossing_vertex() == 1);
    REQUIRE(st2.partner_of(TrajectoryState::kMovingVertex) == 3);
    CHECK_THROWS_AS(degenerate_arc_tableau(st2, 1, Arc::SR), std::invalid_argument);
}

TEST_SUITE_END();
