#pragma once

// Max/min point detection on the grid, the per-net crossing count V, shift
// orbits, and the certified lower bound sum_g V(g) / (2d-2).

#include <cstdint>
#include <vector>

#include "netbounds/diagrams.hpp"
#include "netbounds/trajectory.hpp"

namespace netbounds {

struct ExtremumPoint {
    enum class Kind { Max, Min };

    int index = 0;  // position in S
    Kind kind = Kind::Max;
    std::int64_t level = 0;  // L at a max point, U at a min point

    bool operator==(const ExtremumPoint&) const = default;
};

/// All max and min points of the grid in increasing index order, empty when
/// none exist. A point i is a max point when there are witnesses k with
/// L(i) >= U(k) on both sides: strictly above every L(j) for j between k and
/// i, and at least every L(j) for j between i and k (cyclically); min points
/// mirror this with U and L exchanged. Kinds alternate cyclically; a
/// non-alternating result throws InternalError.
std::vector<ExtremumPoint> extrema(const BoundsGrid& grid);

/// V from an assembled grid: the sum over cyclically adjacent extremum pairs
/// of L(max) - U(min) + 1; zero when there are no extrema. Throws
/// InternalError if an adjacent pair has U(min) > L(max).
std::int64_t v_of_grid(const BoundsGrid& grid);

/// V for one net: collect_grid followed by v_of_grid.
std::int64_t v_of_net(const ChordDiagram& g, int k, const GridOptions& options = {});

struct Orbit {
    ChordDiagram representative;  // lexicographically least of its orbit
    int period = 0;               // smallest T > 0 with shift^T = identity; divides 2d-2
};

/// One representative per shift orbit, ascending by canonical word; the
/// periods sum to catalan_u(d).
std::vector<Orbit> orbits(int d);

struct BoundReport {
    int d = 0;
    int k = 0;
    std::int64_t sum_v = 0;
    std::int64_t bound = 0;  // sum_v / (2d-2), exact
    std::int64_t diagram_count = 0;
    std::int64_t elapsed_ms = 0;
};

struct CountOptions {
    int jobs = 0;                 // 0 = hardware concurrency
    bool orbit_reduction = true;  // sum one representative per orbit times its period
    GridOptions grid;
};

/// Precomputes the work list for one d so several k values can be run
/// without re-enumerating.
class BoundComputer {
public:
    explicit BoundComputer(int d, const CountOptions& options = {});

    BoundReport run(int k) const;

    int d() const { return d_; }
    std::int64_t diagram_count() const { return diagram_count_; }

private:
    struct Item {
        std::uint64_t word;
        int weight;  // orbit period, or 1 without orbit reduction
    };

    int d_;
    CountOptions options_;
    std::int64_t diagram_count_;
    std::vector<Item> items_;
};

/// Sums v_of_net over all catalan_u(d) diagrams and divides by 2d-2; the sum
/// is always exactly divisible (InternalError otherwise). Requires d >= 3
/// and 1 <= k <= 2d-4.
BoundReport lower_bound(int d, int k, const CountOptions& options = {});

}  // namespace netbounds
