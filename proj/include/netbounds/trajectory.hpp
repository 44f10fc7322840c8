#pragma once

// Event-driven trajectory of the moving critical point. Time is never
// represented numerically: only the order in which the moving vertex M
// crosses the fixed vertices and the marked points r, s matters. One full
// revolution takes 2d-1 crossings; the full run makes 2d-2 revolutions and
// returns to the initial matching.
//
// The circle layout is fixed throughout:
//
//     s, [M starts here], F_1 .. F_{2d-3-k}, r, F_{2d-3-k+1} .. F_{2d-3}, s
//
// so arc (s,r) initially holds M plus 2d-3-k fixed vertices and arc (r,s)
// holds the remaining k. Crossing a fixed vertex either leaves the matching
// unchanged (degree-2 coincidence: M crosses its own partner) or rewires
// M--a, y--b into y--a, M--b (degree-6); crossing r flips the orientation
// sign; crossing s starts the next revolution.

#include <cstdint>
#include <vector>

#include "netbounds/bounds.hpp"
#include "netbounds/diagrams.hpp"

namespace netbounds {

class TrajectoryState {
public:
    /// Vertex id of the moving vertex; fixed vertices are 1..2d-3.
    static constexpr int kMovingVertex = 0;

    int d() const { return d_; }
    int k() const { return k_; }
    int points() const { return 2 * d_ - 2; }
    int fixed_count() const { return 2 * d_ - 3; }

    int partner_of(int vertex) const { return partner_[vertex]; }

    /// Gap index 0..2d-2: M sits just past site `gap` (site 0 is s, site
    /// 2d-2-k is r, the rest are fixed vertices in circle order).
    int moving_gap() const { return gap_; }
    int revolution() const { return revolution_; }

    /// Sense (+1/-1) of the map on the sub-arc immediately counterclockwise
    /// of r; flips exactly when M crosses r.
    int orientation() const { return orient_; }

    std::int64_t winding() const { return c_; }

    bool moving_in_rs() const { return gap_ >= r_site_; }
    bool fixed_in_rs(int fixed_id) const { return fixed_id >= r_site_; }
    bool in_arc(int vertex, Arc arc) const {
        const bool rs = vertex == kMovingVertex ? moving_in_rs() : fixed_in_rs(vertex);
        return arc == Arc::RS ? rs : !rs;
    }

    /// Ordered vertex ids inside the arc, M included when it lies there.
    void arc_vertices(Arc arc, std::vector<int>& out) const;

    /// Fixed vertex the next advance will cross, or 0 when r or s is next.
    int next_crossing_vertex() const;

private:
    friend TrajectoryState initial_state(const ChordDiagram&, int, int);
    friend struct CrossingEvent advance(TrajectoryState&);

    TrajectoryState() = default;

    int site_count() const { return 2 * d_ - 1; }

    int d_ = 0;
    int k_ = 0;
    int r_site_ = 0;  // site index of the marked point r
    int gap_ = 0;
    int revolution_ = 0;
    int orient_ = 1;
    std::int64_t c_ = 0;
    std::vector<int> partner_;  // indexed by vertex id
};

struct CrossingEvent {
    enum class Kind { FixedDeg2, FixedDeg6, CrossR, CrossS };

    Kind kind = Kind::FixedDeg2;
    int vertex = 0;         // fixed vertex id for Fixed* events
    int half_interval = 0;  // index into S where the event time falls
};

/// Places the diagram on the layout above: position 1 of `g` becomes the
/// moving vertex in its initial gap just past s, positions 2..2d-2 become
/// F_1..F_{2d-3}. Requires 1 <= k <= 2d-4. `initial_orientation` of -1
/// selects the mirrored sign convention (diagnostics only).
TrajectoryState initial_state(const ChordDiagram& g, int k, int initial_orientation = +1);

/// M crosses the next point counterclockwise; the non-crossing property is
/// preserved. For the closing s-crossing of a full run, half_interval equals
/// 4d-4.
CrossingEvent advance(TrajectoryState& state);

/// The matching read as a diagram anchored at M: M is position 1, the fixed
/// vertices follow counterclockwise. After one full revolution this is the
/// shift of its previous value.
ChordDiagram current_diagram(const TrajectoryState& state);

/// Integer step functions on the half-interval grid S of size 4d-4: index 2n
/// is V_n (moving vertex in (s,r) during revolution n), index 2n+1 is W_n
/// (moving vertex in (r,s)). lower[i] < upper[i] everywhere.
struct BoundsGrid {
    int d = 0;
    int k = 0;
    std::int64_t c = 0;
    std::vector<std::int64_t> lower;  // L
    std::vector<std::int64_t> upper;  // U

    int size() const { return static_cast<int>(lower.size()); }
};

struct GridOptions {
    // Differential-testing hook: recompute both arc tableaux at every
    // sub-configuration and assert they are constant across each
    // half-interval, instead of evaluating once per half-interval.
    bool per_event_recompute = false;
    // Mirrored sign convention (diagnostics only).
    int initial_orientation = +1;
};

/// Per-half-interval trace record: the raw arc intervals, any special
/// degenerate intervals collected inside the half-interval, and the
/// resulting grid entry.
struct HalfIntervalRecord {
    int index = 0;  // position in S
    IntegerInterval rs;
    IntegerInterval sr;
    std::vector<IntegerInterval> rs_degenerate;
    std::vector<IntegerInterval> sr_degenerate;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

/// Runs the full trajectory of (2d-2)(2d-1) events and assembles the grid:
/// per half-interval, upper = min over collected {u1, c - l2} and lower =
/// max over collected {l1, c - u2}, where the collected values come from
/// every nondegenerate sub-configuration plus every degree-6 coincidence
/// whose two chords both leave the arc containing it. Throws InternalError
/// if any collected pair of intervals fails to intersect, or if the run does
/// not close up after 2d-2 revolutions.
BoundsGrid collect_grid(const ChordDiagram& g, int k, const GridOptions& options = {},
                        std::vector<HalfIntervalRecord>* trace = nullptr);

}  // namespace netbounds
