#include "netbounds/arcs.hpp"

#include <algorithm>
#include <stdexcept>

#include "netbounds/errors.hpp"
#include "netbounds/trajectory.hpp"

namespace netbounds {

void arc_tableau_over(const std::vector<int>& arc_vertices, const TrajectoryState& state,
                      ArcTableau& out) {
    const int n = static_cast<int>(arc_vertices.size());
    out.n = n;
    out.first_row.clear();
    out.second_row.clear();
    out.even_second = 0;
    out.odd_second = 0;
    out.exiting = 0;
    out.segments.clear();

    static thread_local std::vector<int> pos;
    pos.assign(static_cast<std::size_t>(state.points()), 0);
    for (int i = 0; i < n; ++i)
        pos[arc_vertices[i]] = i + 1;

    static thread_local std::vector<int> exits;
    exits.clear();
    for (int i = 1; i <= n; ++i) {
        const int mate = state.partner_of(arc_vertices[i - 1]);
        const int j = pos[mate];
        if (j == 0) {
            out.first_row.push_back(i);
            exits.push_back(i);
        } else if (j < i) {
            out.second_row.push_back(i);
            (i % 2 == 0 ? out.even_second : out.odd_second) += 1;
        } else {
            out.first_row.push_back(i);
        }
    }
    out.exiting = static_cast<int>(exits.size());
    detail::check(out.n == 2 * (out.even_second + out.odd_second) + out.exiting,
                  "arc tableau: n = 2(E+O) + m violated");

    out.segments.assign(static_cast<std::size_t>(out.exiting) + 1, {0, 0});
    std::size_t seg = 0;
    for (int entry : out.second_row) {
        while (seg < exits.size() && exits[seg] < entry)
            ++seg;
        (entry % 2 == 0 ? out.segments[seg].first : out.segments[seg].second) += 1;
    }
}

void arc_tableau(const TrajectoryState& state, Arc arc, ArcTableau& out) {
    static thread_local std::vector<int> vertices;
    state.arc_vertices(arc, vertices);
    arc_tableau_over(vertices, state, out);
}

ArcTableau arc_tableau(const TrajectoryState& state, Arc arc) {
    ArcTableau out;
    arc_tableau(state, arc, out);
    return out;
}

std::pair<ArcTableau, Parity> degenerate_arc_tableau(const TrajectoryState& state,
                                                     int coincidence, Arc arc) {
    if (coincidence < 1 || coincidence > state.fixed_count())
        throw std::invalid_argument("degenerate_arc_tableau: not a fixed vertex");
    if (state.next_crossing_vertex() != coincidence)
        throw std::invalid_argument(
            "degenerate_arc_tableau: moving vertex is not about to cross the coincidence");
    if (!state.in_arc(coincidence, arc) || !state.in_arc(TrajectoryState::kMovingVertex, arc))
        throw std::invalid_argument("degenerate_arc_tableau: coincidence not inside the arc");
    if (state.partner_of(TrajectoryState::kMovingVertex) == coincidence)
        throw std::invalid_argument(
            "degenerate_arc_tableau: degree-2 coincidence needs no special interval");
    const int a = state.partner_of(TrajectoryState::kMovingVertex);
    const int b = state.partner_of(coincidence);
    if (state.in_arc(a, arc) || state.in_arc(b, arc))
        throw std::invalid_argument("degenerate_arc_tableau: both chords must leave the arc");

    std::vector<int> vertices;
    state.arc_vertices(arc, vertices);
    const auto at = std::find(vertices.begin(), vertices.end(), TrajectoryState::kMovingVertex);
    detail::check(at != vertices.end(), "degenerate_arc_tableau: moving vertex missing from arc");
    const int i = static_cast<int>(at - vertices.begin()) + 1;
    detail::check(i < static_cast<int>(vertices.size()) && vertices[i] == coincidence,
                  "degenerate_arc_tableau: coincidence must follow the moving vertex");

    ArcTableau t;
    arc_tableau_over(vertices, state, t);
    return {std::move(t), (i - 1) % 2 == 0 ? Parity::Even : Parity::Odd};
}

}  // namespace netbounds
