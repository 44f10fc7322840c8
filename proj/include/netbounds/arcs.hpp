#pragma once

// Arc-restricted tableaux. The circle carries two marked points r and s;
// restricting the current net to the open arc (r,s) or (s,r) and numbering
// its vertices in arc order yields a two-row tableau whose second-row parity
// counts E and O, together with the exit count m, drive the interval
// formulas in bounds.hpp.

#include <utility>
#include <vector>

namespace netbounds {

class TrajectoryState;

/// RS is the positively oriented open arc from r to s; SR runs from s to r.
enum class Arc { RS, SR };

enum class Parity { Even, Odd };

/// The tableau of one arc. Vertices inside the arc are numbered 1..n in arc
/// order; index i sits in the second row iff its chord goes to an earlier
/// arc vertex, in the first row otherwise (later internal partner, or a
/// chord leaving the arc). Always n = 2*(E+O) + m.
struct ArcTableau {
    int n = 0;
    std::vector<int> first_row;
    std::vector<int> second_row;
    int even_second = 0;  // E: even entries in the second row
    int odd_second = 0;   // O: odd entries in the second row
    int exiting = 0;      // m: vertices whose chord leaves the arc
    // (E_i, O_i) per gap between consecutive exiting indices; m+1 entries.
    std::vector<std::pair<int, int>> segments;

    bool operator==(const ArcTableau&) const = default;
};

/// Tableau of the chosen arc in the state's current (nondegenerate)
/// configuration; the moving vertex is included when it lies in that arc.
ArcTableau arc_tableau(const TrajectoryState& state, Arc arc);
void arc_tableau(const TrajectoryState& state, Arc arc, ArcTableau& out);

/// Core routine over an explicit ordered vertex list (ids as in
/// TrajectoryState); an empty list yields the empty tableau n = 0.
void arc_tableau_over(const std::vector<int>& arc_vertices, const TrajectoryState& state,
                      ArcTableau& out);

/// Tableau for the coincidence event in which the moving vertex crosses the
/// fixed vertex `coincidence` inside the arc and both chords at the double
/// point leave the arc. The double point holds two consecutive indices
/// i, i+1; the returned tableau is that of the adjacent nondegenerate
/// configuration (identical on both sides of the event), and the parity is
/// (i-1) mod 2 — the number of simple arc vertices strictly between the
/// arc's start and the coincidence.
///
/// Throws std::invalid_argument when the moving vertex is not immediately
/// clockwise of `coincidence`, the coincidence is not in the arc, or either
/// chord stays inside the arc (those events need no special interval).
std::pair<ArcTableau, Parity> degenerate_arc_tableau(const TrajectoryState& state,
                                                     int coincidence, Arc arc);

}  // namespace netbounds
