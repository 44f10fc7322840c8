#include <doctest.h>

#include <stdexcept>

#include "netbounds/bounds.hpp"
#include "netbounds/diagrams.hpp"
#include "netbounds/trajectory.hpp"

using namespace netbounds;

namespace {

ArcTableau make_tableau(int n, int even_second, int odd_second) {
    ArcTableau t;
    t.n = n;
    t.even_second = even_second;
    t.odd_second = odd_second;
    t.exiting = n - 2 * (even_second + odd_second);
    return t;
}

}  // namespace

TEST_SUITE_BEGIN("bounds");

TEST_CASE("nondegenerate interval endpoints") {
    CHECK(interval_nondegenerate(make_tableau(8, 2, 2), +1) == IntegerInterval{0, 1});
    CHECK(interval_nondegenerate(make_tableau(1, 0, 0), +1) == IntegerInterval{-1, 1});
    CHECK(interval_nondegenerate(make_tableau(1, 0, 0), -1) == IntegerInterval{-1, 1});
    // second row {2}: one even entry
    CHECK(interval_nondegenerate(make_tableau(2, 1, 0), +1) == IntegerInterval{-1, 0});
    CHECK(interval_nondegenerate(make_tableau(2, 1, 0), -1) == IntegerInterval{0, 1});
    CHECK_THROWS_AS(interval_nondegenerate(make_tableau(1, 0, 0), 0), std::invalid_argument);
}

TEST_CASE("orientation flip mirrors the interval") {
    for (int n = 1; n <= 9; ++n) {
        for (int e = 0; 2 * e <= n; ++e) {
            for (int o = 0; 2 * (e + o) <= n; ++o) {
                const ArcTableau t = make_tableau(n, e, o);
                const IntegerInterval plus = interval_nondegenerate(t, +1);
                const IntegerInterval minus = interval_nondegenerate(t, -1);
                CHECK(minus == IntegerInterval{-plus.hi, -plus.lo});
                CHECK(plus.hi - plus.lo == t.exiting + 1);
            }
        }
    }
}

TEST_CASE("degenerate interval endpoints") {
    CHECK(interval_degenerate(make_tableau(2, 0, 0), Parity::Even, +1) == IntegerInterval{0, 2});
    CHECK(interval_degenerate(make_tableau(4, 0, 0), Parity::Odd, +1) == IntegerInterval{-2, 2});
    CHECK(interval_degenerate(make_tableau(2, 0, 0), Parity::Even, -1) == IntegerInterval{-2, 0});
    // width m, one less than the nondegenerate width
    for (int n = 2; n <= 8; ++n) {
        for (int e = 0; 2 * e + 2 <= n; ++e) {
            const ArcTableau t = make_tableau(n, e, 0);
            if (t.exiting < 2)
                continue;
            for (Parity p : {Parity::Even, Parity::Odd}) {
                const IntegerInterval deg = interval_degenerate(t, p, +1);
                const IntegerInterval full = interval_nondegenerate(t, +1);
                CHECK(deg.hi - deg.lo == t.exiting);
                CHECK(deg.lo >= full.lo);
                CHECK(deg.hi <= full.hi);
            }
        }
    }
}

TEST_CASE("winding constant from tableau counts") {
    // single chord: second row {2}
    const FullTableau single = to_tableau(ChordDiagram::from_pairs(2, {{1, 2}}));
    REQUIRE(single.second_row == std::vector<int>{2});
    CHECK(winding_from_counts(1, 0) == 0);

    // two side-by-side chords anchored at position 1: second row {2, 4}
    const FullTableau pair = to_tableau(ChordDiagram::from_pairs(3, {{1, 2}, {3, 4}}));
    REQUIRE(pair.second_row == std::vector<int>{2, 4});
    CHECK(winding_from_counts(2, 0) == 1);
}

TEST_CASE("winding constant of trajectory states") {
    const auto g = ChordDiagram::from_pairs(3, {{1, 2}, {3, 4}});
    CHECK(initial_state(g, 1).winding() == 1);
    CHECK(initial_state(g, 1, -1).winding() == -1);

    const auto h = ChordDiagram::from_pairs(3, {{1, 4}, {2, 3}});
    CHECK(initial_state(h, 1).winding() == -1);
}

TEST_CASE("winding constant is the unique consistent integer") {
    // Oracle: c must lie in (l1+l2, u1+u2) for every sub-configuration; for
    // these sizes the intersection over a full run pins it exactly.
    for (int d = 3; d <= 4; ++d) {
        for (const ChordDiagram& g : enumerate_diagrams(d)) {
            for (int k = 1; k <= 2 * d - 4; ++k) {
                std::vector<HalfIntervalRecord> trace;
                const BoundsGrid grid = collect_grid(g, k, {}, &trace);
                std::int64_t lo = -100, hi = 100;
                for (const HalfIntervalRecord& r : trace) {
                    lo = std::max(lo, r.rs.lo + r.sr.lo);
                    hi = std::min(hi, r.rs.hi + r.sr.hi);
                }
                CHECK(lo < grid.c);
                CHECK(grid.c < hi);
                if (hi - lo == 2)  // window pins a unique integer
                    CHECK(grid.c == lo + 1);
            }
        }
    }
    // the spec'd anchor example pins uniquely
    std::vector<HalfIntervalRecord> trace;
    const BoundsGrid grid = collect_grid(ChordDiagram::from_pairs(3, {{1, 2}, {3, 4}}), 1, {}, &trace);
    std::int64_t lo = -100, hi = 100;
    for (const HalfIntervalRecord& r : trace) {
        lo = std::max(lo, r.rs.lo + r.sr.lo);
        hi = std::min(hi, r.rs.hi + r.sr.hi);
    }
    CHECK(hi - lo == 2);
    CHECK(grid.c == 1);
}

TEST_CASE("winding constant demands the initial configuration") {
    const auto g = ChordDiagram::from_pairs(3, {{1, 2}, {3, 4}});
    TrajectoryState st = initial_state(g, 1);
    advance(st);
    CHECK_THROWS_AS(winding_constant(st), std::invalid_argument);
}

TEST_SUITE_END();
