#pragma once

// Chord diagrams: non-crossing perfect matchings on the cyclically ordered
// circle points 1..2d-2, with point 1 distinguished. Includes the bijection
// with two-row Young tableaux, the one-step rotation (shift), exhaustive
// enumeration in canonical order, and the text codecs.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netbounds {

/// The d-th Catalan number u_d = (1/d) * binom(2d-2, d-1): the number of
/// chord diagrams on 2d-2 points. Throws std::invalid_argument for d < 1 and
/// std::overflow_error once the value leaves the 64-bit range (d >= 37);
/// never wraps silently.
std::int64_t catalan_u(int d);

/// A non-crossing perfect matching on points 1..2d-2. partner() is a
/// fixed-point-free involution, and no two chords cross: there are no
/// positions a < b < c < e with partner(a) = c and partner(b) = e.
class ChordDiagram {
public:
    /// `partner` maps each position 1..2d-2 to its chord mate (1-based).
    /// Throws std::invalid_argument unless the map is a fixed-point-free
    /// non-crossing involution.
    ChordDiagram(int d, std::vector<int> partner);

    static ChordDiagram from_pairs(int d, const std::vector<std::pair<int, int>>& chords);

    int d() const { return d_; }
    int points() const { return 2 * d_ - 2; }

    int partner(int position) const { return partner_[position]; }

    /// Cyclic neighbours of a position.
    int next(int position) const { return position == points() ? 1 : position + 1; }
    int prev(int position) const { return position == 1 ? points() : position - 1; }

    /// Chords as {a, b} with a < b, ascending in a.
    std::vector<std::pair<int, int>> chords() const;

    bool operator==(const ChordDiagram&) const = default;

private:
    int d_;
    std::vector<int> partner_;  // 1-based; partner_[0] unused
};

/// Two rows of d-1 entries each, strictly increasing along rows and down
/// columns, together holding every integer 1..2d-2 exactly once.
struct FullTableau {
    std::vector<int> first_row;
    std::vector<int> second_row;

    bool operator==(const FullTableau&) const = default;
};

/// Rotate every chord one position counterclockwise: {a, b} -> {a+1, b+1}
/// with positions wrapping 2d-2 -> 1. Equivalently, move the distinguished
/// point to its predecessor.
ChordDiagram shift(const ChordDiagram& g);

/// Position i goes to the first row iff its partner is larger.
FullTableau to_tableau(const ChordDiagram& g);

/// Inverse of to_tableau: each second-row entry pairs with the nearest
/// earlier unmatched first-row entry. Throws std::invalid_argument when the
/// rows violate the tableau conditions.
ChordDiagram from_tableau(const FullTableau& t);

/// All diagrams on 2d-2 points, exactly once, ordered lexicographically by
/// parenthesis word ('(' < ')').
std::vector<ChordDiagram> enumerate_diagrams(int d);

/// Streaming variant of the above, same order.
void enumerate_diagrams(int d, const std::function<void(const ChordDiagram&)>& visit);

/// Parses either a balanced parenthesis word ("(())()") or an explicit pair
/// list ("1-4,2-3,5-6"). Throws ParseError with the offending position.
ChordDiagram parse_diagram(std::string_view text);

/// Canonical form: the parenthesis word, '(' at positions whose partner is
/// larger.
std::string format_diagram(const ChordDiagram& g);

namespace detail {

// Word encoding for the enumeration/orbit machinery: 2d-2 bits, leftmost
// position in the most significant bit, ')' = 1, so unsigned comparison of
// words equals lexicographic comparison of parenthesis strings.
std::uint64_t encode_word(const std::vector<int>& partner, int points);
std::uint64_t diagram_word(const ChordDiagram& g);
ChordDiagram diagram_from_word(std::uint64_t word, int d);

// Word of shift^j applied to the diagram with the given partner map,
// computed without materializing the rotated diagram.
std::uint64_t shifted_word(const std::vector<int>& partner, int points, int j);

// Visits every matching's partner map (1-based, reused buffer) in canonical
// order.
void enumerate_matchings(int points, const std::function<void(const std::vector<int>&)>& visit);

}  // namespace detail
}  // namespace netbounds
