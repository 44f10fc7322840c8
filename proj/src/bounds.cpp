#include "netbounds/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "netbounds/errors.hpp"
#include "netbounds/trajectory.hpp"

namespace netbounds {

namespace {

IntegerInterval halve_and_orient(std::int64_t lo_pi, std::int64_t hi_pi, int orientation) {
    if (orientation != 1 && orientation != -1)
        throw std::invalid_argument("interval: orientation must be +1 or -1");
    detail::check(lo_pi % 2 == 0 && hi_pi % 2 == 0,
                  "interval: endpoints must be even multiples of pi");
    IntegerInterval r{lo_pi / 2, hi_pi / 2};
    if (orientation < 0)
        r = {-r.hi, -r.lo};
    return r;
}

}  // namespace

IntegerInterval interval_nondegenerate(const ArcTableau& t, int orientation) {
    const std::int64_t parity_term = (t.n + 1) % 2;
    const std::int64_t lo_pi = parity_term - t.n + 4 * t.odd_second - 1;
    const std::int64_t hi_pi = parity_term + t.n - 4 * t.even_second + 1;
    const IntegerInterval r = halve_and_orient(lo_pi, hi_pi, orientation);
    detail::check(r.hi - r.lo == t.exiting + 1, "interval: width must be m + 1");
    return r;
}

IntegerInterval interval_degenerate(const ArcTableau& t, Parity parity, int orientation) {
    const std::int64_t parity_term = (t.n + 1) % 2;
    std::int64_t lo_pi = parity_term - t.n + 4 * t.odd_second - 1;
    std::int64_t hi_pi = parity_term + t.n - 4 * t.even_second + 1;
    if (parity == Parity::Odd)
        hi_pi -= 2;
    else
        lo_pi += 2;
    const IntegerInterval r = halve_and_orient(lo_pi, hi_pi, orientation);
    detail::check(r.hi - r.lo == t.exiting, "degenerate interval: width must be m");
    detail::check(r.lo < r.hi, "degenerate interval: empty (m < 2 cannot be the both-exit case)");
    return r;
}

std::int64_t winding_constant(const TrajectoryState& st) {
    if (st.revolution() != 0 || st.moving_gap() != 0)
        throw std::invalid_argument("winding_constant: expects the initial configuration");

    // Vertices counterclockwise starting just past r; the sequence then ends
    // with the vertex immediately clockwise of r, which anchors the tableau.
    const int sites = 2 * st.d() - 1;
    const int r_site = 2 * st.d() - 2 - st.k();
    std::vector<int> order;
    order.reserve(st.points());
    if (st.moving_gap() == r_site)
        order.push_back(TrajectoryState::kMovingVertex);
    for (int step = 1; step < sites; ++step) {
        const int site = (r_site + step) % sites;
        if (site != 0)
            order.push_back(site < r_site ? site : site - 1);
        if (st.moving_gap() == site)
            order.push_back(TrajectoryState::kMovingVertex);
    }
    detail::check(static_cast<int>(order.size()) == st.points(),
                  "winding_constant: vertex walk incomplete");
    std::rotate(order.begin(), order.end() - 1, order.end());

    std::vector<int> pos(static_cast<std::size_t>(st.points()) + 1, 0);
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        pos[order[i]] = i + 1;
    int even = 0, odd = 0;
    for (int i = 1; i <= st.points(); ++i) {
        if (pos[st.partner_of(order[i - 1])] < i)
            (i % 2 == 0 ? even : odd) += 1;
    }
    const std::int64_t c = winding_from_counts(even, odd);
    return st.orientation() > 0 ? c : -c;
}

}  // namespace netbounds
