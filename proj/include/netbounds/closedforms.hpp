#pragma once

// Closed-form and enumerative cross-checks for the k = 1 and k = 2 rows of
// the bounds table.

#include <cstdint>

#include "netbounds/diagrams.hpp"

namespace netbounds {

/// u_d - 2*u_{d-1}: the k = 1 bound in closed form. Requires d >= 3.
std::int64_t k1_bound(int d);

/// Number of positions whose partner is not a cyclic neighbour.
int neighbor_free_count(const ChordDiagram& g);

/// N_j: diagrams on 2d-6 points where every adjacent chord {i, i+1} has
/// i >= 2j-3. Closed form in Catalan numbers for j <= 6, enumeration beyond;
/// the two agree wherever both apply. Requires d >= 4 and 2 <= j <= d-2.
std::int64_t nk(int d, int j);

/// Same count by direct enumeration (the oracle for the closed forms).
std::int64_t nk_enumerated(int d, int j);

/// Sum of nk(d, j) over j = 2..d-2; equals the k = 2 bound. Requires d >= 4.
std::int64_t script_n(int d);

/// Direct enumeration: diagrams with chord {1,2} whose next adjacent-pair
/// chord {p, p+1}, scanning p = 3, 4, ... with no wraparound, exists and
/// starts at an even p.
std::int64_t script_n_enumerated(int d);

}  // namespace netbounds
