#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "netbounds/counting.hpp"

using namespace netbounds;

namespace {

// Literal evaluation of the max/min point predicates, quantifiers spelled
// out with no early exits; the oracle for the production scanner.
bool in_cyclic_open(int a, int x, int b, int n) {
    if (a == b)
        return x != a;
    if (a < b)
        return a < x && x < b;
    return x > a || x < b;
    (void)n;
}

std::vector<ExtremumPoint> brute_extrema(const BoundsGrid& g) {
    const int n = g.size();
    std::vector<ExtremumPoint> out;
    for (int i = 0; i < n; ++i) {
        bool max1 = false, max2 = false, min1 = false, min2 = false;
        for (int k = 0; k < n; ++k) {
            if (g.lower[i] >= g.upper[k]) {
                bool ok = true;
                for (int j = 0; j < n; ++j)
                    if (in_cyclic_open(k, j, i, n) && !(g.lower[i] > g.lower[j]))
                        ok = false;
                max1 = max1 || ok;
                ok = true;
                for (int j = 0; j < n; ++j)
                    if (in_cyclic_open(i, j, k, n) && !(g.lower[i] >= g.lower[j]))
                        ok = false;
                max2 = max2 || ok;
            }
            if (g.upper[i] <= g.lower[k]) {
                bool ok = true;
                for (int j = 0; j < n; ++j)
                    if (in_cyclic_open(k, j, i, n) && !(g.upper[i] < g.upper[j]))
                        ok = false;
                min1 = min1 || ok;
                ok = true;
                for (int j = 0; j < n; ++j)
                    if (in_cyclic_open(i, j, k, n) && !(g.upper[i] <= g.upper[j]))
                        ok = false;
                min2 = min2 || ok;
            }
        }
        if (max1 && max2)
            out.push_back({i, ExtremumPoint::Kind::Max, g.lower[i]});
        if (min1 && min2)
            out.push_back({i, ExtremumPoint::Kind::Min, g.upper[i]});
    }
    return out;
}

BoundsGrid constant_grid(int entries, std::int64_t lo, std::int64_t hi) {
    BoundsGrid g;
    g.d = entries / 4 + 1;
    g.k = 1;
    g.lower.assign(entries, lo);
    g.upper.assign(entries, hi);
    return g;
}

}  // namespace

TEST_SUITE_BEGIN("counting");

TEST_CASE("constant grid has no extrema") {
    CHECK(extrema(constant_grid(12, 0, 1)).empty());
    CHECK(v_of_grid(constant_grid(12, 0, 1)) == 0);
}

TEST_CASE("extrema agree with the literal predicate evaluation") {
    for (int d = 3; d <= 5; ++d) {
        for (const ChordDiagram& g : enumerate_diagrams(d)) {
            for (int k = 1; k <= 2 * d - 4; ++k) {
                const BoundsGrid grid = collect_grid(g, k);
                CHECK(extrema(grid) == brute_extrema(grid));
            }
        }
    }
}

TEST_CASE("the d=4, k=1 reference net has exactly two extrema") {
    const BoundsGrid grid = collect_grid(parse_diagram("(())()"), 1);
    const auto points = extrema(grid);
    REQUIRE(points.size() == 2);
    const auto& mn = points[0].kind == ExtremumPoint::Kind::Min ? points[0] : points[1];
    const auto& mx = points[0].kind == ExtremumPoint::Kind::Max ? points[0] : points[1];
    CHECK(mn.index == 5);  // W_2
    CHECK(mn.level == 0);
    CHECK(mx.index == 11);  // W_5
    CHECK(mx.level == 0);
    CHECK(grid.c == 0);
    CHECK(v_of_grid(grid) == 2);
}

TEST_CASE("per-net V values for d=4, k=1") {
    CHECK(v_of_net(ChordDiagram::from_pairs(4, {{1, 4}, {2, 3}, {5, 6}}), 1) == 2);
    CHECK(v_of_net(ChordDiagram::from_pairs(4, {{1, 2}, {3, 4}, {5, 6}}), 1) == 0);
    std::multiset<std::int64_t> values;
    for (const ChordDiagram& g : enumerate_diagrams(4))
        values.insert(v_of_net(g, 1));
    CHECK(values == std::multiset<std::int64_t>{0, 0, 2, 2, 2});
}

TEST_CASE("V is invariant under shift and orientation flip") {
    GridOptions mirrored;
    mirrored.initial_orientation = -1;
    for (int d = 3; d <= 5; ++d) {
        for (const ChordDiagram& g : enumerate_diagrams(d)) {
            for (int k = 1; k <= 2 * d - 4; ++k) {
                const std::int64_t v = v_of_net(g, k);
                CHECK(v_of_net(shift(g), k) == v);
                CHECK(v_of_net(g, k, mirrored) == v);
            }
        }
    }
}

TEST_CASE("orbits") {
    const auto d2 = orbits(2);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].period == 1);

    const auto d4 = orbits(4);
    std::multiset<int> periods;
    std::int64_t total = 0;
    for (const Orbit& o : d4) {
        periods.insert(o.period);
        total += o.period;
        CHECK((2 * 4 - 2) % o.period == 0);
    }
    CHECK(total == 5);
    CHECK(periods == std::multiset<int>{2, 3});

    for (int d = 2; d <= 7; ++d) {
        std::int64_t sum = 0;
        for (const Orbit& o : orbits(d)) {
            CHECK((2 * d - 2) % o.period == 0);
            sum += o.period;
        }
        CHECK(sum == catalan_u(d));
    }
}

TEST_CASE("lower bounds at small sizes") {
    const BoundReport r41 = lower_bound(4, 1);
    CHECK(r41.bound == 1);
    CHECK(r41.sum_v == 6);
    CHECK(r41.diagram_count == 5);
    CHECK(r41.bound * (2 * 4 - 2) == r41.sum_v);

    CHECK(lower_bound(3, 1).bound == 0);
    CHECK(lower_bound(4, 2).bound == 1);
    CHECK(lower_bound(5, 1).bound == 4);
    CHECK(lower_bound(5, 2).bound == 2);
    CHECK(lower_bound(5, 3).bound == 4);
    CHECK(lower_bound(6, 3).bound == 12);

    CHECK_THROWS_AS(lower_bound(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound(2, 1), std::invalid_argument);
}

TEST_CASE("orbit-reduced sums equal naive sums") {
    CountOptions naive;
    naive.orbit_reduction = false;
    for (int d = 3; d <= 6; ++d) {
        for (int k = 1; k <= 2 * d - 4; ++k) {
            const BoundReport a = lower_bound(d, k);
            const BoundReport b = lower_bound(d, k, naive);
            CHECK(a.sum_v == b.sum_v);
            CHECK(a.bound == b.bound);
        }
    }
}

TEST_CASE("parallel runs are deterministic") {
    CountOptions two_jobs;
    two_jobs.jobs = 2;
    CountOptions four_jobs;
    four_jobs.jobs = 4;
    const BoundReport a = lower_bound(7, 3, two_jobs);
    const BoundReport b = lower_bound(7, 3, four_jobs);
    const BoundReport c = lower_bound(7, 3);
    CHECK(a.bound == 36);
    CHECK(a.sum_v == b.sum_v);
    CHECK(b.sum_v == c.sum_v);
}

TEST_SUITE_END();
