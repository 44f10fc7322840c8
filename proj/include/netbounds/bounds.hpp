#pragma once

// Certified open intervals for the argument increment of the map along an
// arc, in exact 2-pi units, and the winding constant c that couples the two
// arcs: L([r,s]) + L([s,r]) = 2*pi*c. No floating point anywhere: the
// pi-unit endpoint expressions are asserted even and halved.

#include <cstdint>

#include "netbounds/arcs.hpp"

namespace netbounds {

class TrajectoryState;

/// The open interval (2*pi*lo, 2*pi*hi).
struct IntegerInterval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool operator==(const IntegerInterval&) const = default;
};

/// Interval containing the argument increment over the arc of a
/// nondegenerate configuration. `orientation` (+1/-1) is the sense of the
/// map on the initial sub-arc, from the arc's start to its first vertex.
/// For +1 the endpoints are
///   lo = ((n+1) mod 2 - n + 4*O - 1) / 2,
///   hi = ((n+1) mod 2 + n - 4*E + 1) / 2;
/// for -1 the interval is the mirror (-hi, +... applied as (-hi, -lo)).
/// Width is always m + 1.
IntegerInterval interval_nondegenerate(const ArcTableau& t, int orientation);

/// Interval for the both-exit degree-6 coincidence: odd parity lowers the
/// upper endpoint by one 2-pi unit, even parity raises the lower endpoint by
/// one. Width is m, nonempty since m >= 2 in the both-exit case.
IntegerInterval interval_degenerate(const ArcTableau& t, Parity parity, int orientation);

/// c = E - O - 1 from the full tableau of the configuration anchored at the
/// vertex immediately clockwise of r (negated under the mirrored initial
/// orientation). Must be called on the initial configuration; the value is
/// constant along the whole trajectory.
std::int64_t winding_constant(const TrajectoryState& initial);

/// The winding formula on raw second-row counts of a full tableau.
inline std::int64_t winding_from_counts(int even_second, int odd_second) {
    return static_cast<std::int64_t>(even_second) - odd_second - 1;
}

}  // namespace netbounds
