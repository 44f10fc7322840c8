#include "netbounds/trajectory.hpp"

#include <algorithm>
#include <stdexcept>

#include "netbounds/errors.hpp"

namespace netbounds {

void TrajectoryState::arc_vertices(Arc arc, std::vector<int>& out) const {
    out.clear();
    if (arc == Arc::SR) {
        if (gap_ == 0)
            out.push_back(kMovingVertex);
        for (int site = 1; site < r_site_; ++site) {
            out.push_back(site);
            if (gap_ == site)
                out.push_back(kMovingVertex);
        }
    } else {
        if (gap_ == r_site_)
            out.push_back(kMovingVertex);
        for (int site = r_site_ + 1; site <= 2 * d_ - 2; ++site) {
            out.push_back(site - 1);
            if (gap_ == site)
                out.push_back(kMovingVertex);
        }
    }
}

int TrajectoryState::next_crossing_vertex() const {
    const int site = (gap_ + 1) % site_count();
    if (site == 0 || site == r_site_)
        return 0;
    return site < r_site_ ? site : site - 1;
}

TrajectoryState initial_state(const ChordDiagram& g, int k, int initial_orientation) {
    const int d = g.d();
    if (k < 1 || k > 2 * d - 4)
        throw std::invalid_argument("initial_state: k must satisfy 1 <= k <= 2d-4");
    if (initial_orientation != 1 && initial_orientation != -1)
        throw std::invalid_argument("initial_state: orientation must be +1 or -1");
    TrajectoryState st;
    st.d_ = d;
    st.k_ = k;
    st.r_site_ = 2 * d - 2 - k;
    st.orient_ = initial_orientation;
    st.partner_.resize(static_cast<std::size_t>(2 * d - 2));
    for (int p = 1; p <= 2 * d - 2; ++p)
        st.partner_[p - 1] = g.partner(p) - 1;
    st.c_ = winding_constant(st);
    return st;
}

CrossingEvent advance(TrajectoryState& st) {
    const int crossed = (st.gap_ + 1) % st.site_count();
    st.gap_ = crossed;
    CrossingEvent ev;
    if (crossed == 0) {
        ++st.revolution_;
        ev.kind = CrossingEvent::Kind::CrossS;
        ev.half_interval = 2 * st.revolution_;
    } else if (crossed == st.r_site_) {
        st.orient_ = -st.orient_;
        ev.kind = CrossingEvent::Kind::CrossR;
        ev.half_interval = 2 * st.revolution_ + 1;
    } else {
        const int y = crossed < st.r_site_ ? crossed : crossed - 1;
        ev.vertex = y;
        ev.half_interval = crossed < st.r_site_ ? 2 * st.revolution_ : 2 * st.revolution_ + 1;
        if (st.partner_[TrajectoryState::kMovingVertex] == y) {
            ev.kind = CrossingEvent::Kind::FixedDeg2;
        } else {
            ev.kind = CrossingEvent::Kind::FixedDeg6;
            const int a = st.partner_[TrajectoryState::kMovingVertex];
            const int b = st.partner_[y];
            st.partner_[y] = a;
            st.partner_[a] = y;
            st.partner_[TrajectoryState::kMovingVertex] = b;
            st.partner_[b] = TrajectoryState::kMovingVertex;
        }
    }
    return ev;
}

ChordDiagram current_diagram(const TrajectoryState& st) {
    const int n = st.points();
    const int sites = 2 * st.d() - 1;
    std::vector<int> order;
    order.reserve(n);
    order.push_back(TrajectoryState::kMovingVertex);
    for (int step = 1; step <= sites; ++step) {
        const int site = (st.moving_gap() + step) % sites;
        if (site != 0 && site != 2 * st.d() - 2 - st.k())
            order.push_back(site < 2 * st.d() - 2 - st.k() ? site : site - 1);
    }
    detail::check(static_cast<int>(order.size()) == n, "current_diagram: vertex walk incomplete");
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i + 1;
    std::vector<int> partner(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        partner[i + 1] = pos[st.partner_of(order[i])];
    return ChordDiagram(st.d(), std::move(partner));
}

namespace {

// Open integer intervals (a,b), (c,e) intersect iff max(a,c) < min(b,e).
bool open_overlap(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e) {
    return std::max(a, c) < std::min(b, e);
}

}  // namespace

BoundsGrid collect_grid(const ChordDiagram& g, int k, const GridOptions& options,
                        std::vector<HalfIntervalRecord>* trace) {
    TrajectoryState st = initial_state(g, k, options.initial_orientation);
    const int d = st.d();
    const int half_intervals = 4 * d - 4;
    const std::int64_t c = st.winding();

    BoundsGrid grid;
    grid.d = d;
    grid.k = k;
    grid.c = c;
    grid.lower.resize(static_cast<std::size_t>(half_intervals));
    grid.upper.resize(static_cast<std::size_t>(half_intervals));
    if (trace) {
        trace->clear();
        trace->reserve(static_cast<std::size_t>(half_intervals));
    }

    ArcTableau t_rs, t_sr;
    IntegerInterval i_rs, i_sr;
    int orient_rs = 0, orient_sr = 0;

    const auto evaluate = [&](ArcTableau& rs, ArcTableau& sr, IntegerInterval& irs,
                              IntegerInterval& isr) {
        arc_tableau(st, Arc::RS, rs);
        arc_tableau(st, Arc::SR, sr);
        orient_rs = st.orientation();
        // The sense of the map alternates across each simple critical point,
        // so crossing the n vertices of (r,s) fixes the sense at s's side.
        orient_sr = rs.n % 2 == 0 ? orient_rs : -orient_rs;
        irs = interval_nondegenerate(rs, orient_rs);
        isr = interval_nondegenerate(sr, orient_sr);
        detail::check(open_overlap(irs.lo, irs.hi, c - isr.hi, c - isr.lo),
                      "collect_grid: arc intervals fail to intersect");
        if (st.moving_in_rs())
            detail::check(irs.lo >= c - isr.hi && irs.hi <= c - isr.lo,
                          "collect_grid: W interval not contained in the reflected one");
    };

    for (int hi = 0; hi < half_intervals; ++hi) {
        const bool in_w = (hi & 1) != 0;
        detail::check(st.moving_in_rs() == in_w, "collect_grid: half-interval bookkeeping");
        detail::check(st.revolution() == hi / 2, "collect_grid: revolution bookkeeping");

        evaluate(t_rs, t_sr, i_rs, i_sr);
        std::int64_t low = std::max(i_rs.lo, c - i_sr.hi);
        std::int64_t up = std::min(i_rs.hi, c - i_sr.lo);

        HalfIntervalRecord rec;
        if (trace) {
            rec.index = hi;
            rec.rs = i_rs;
            rec.sr = i_sr;
        }

        const int interior = in_w ? k : 2 * d - 3 - k;
        for (int e = 0; e < interior; ++e) {
            const int y = st.next_crossing_vertex();
            detail::check(y != 0, "collect_grid: expected a fixed-vertex crossing");
            if (st.partner_of(TrajectoryState::kMovingVertex) != y) {
                const Arc arc = in_w ? Arc::RS : Arc::SR;
                const int a = st.partner_of(TrajectoryState::kMovingVertex);
                const int b = st.partner_of(y);
                if (!st.in_arc(a, arc) && !st.in_arc(b, arc)) {
                    auto [t_deg, parity] = degenerate_arc_tableau(st, y, arc);
                    const IntegerInterval deg = interval_degenerate(
                        t_deg, parity, arc == Arc::RS ? orient_rs : orient_sr);
                    if (arc == Arc::RS) {
                        detail::check(open_overlap(deg.lo, deg.hi, c - i_sr.hi, c - i_sr.lo),
                                      "collect_grid: degenerate interval fails to intersect");
                        low = std::max(low, deg.lo);
                        up = std::min(up, deg.hi);
                        if (trace)
                            rec.rs_degenerate.push_back(deg);
                    } else {
                        detail::check(open_overlap(i_rs.lo, i_rs.hi, c - deg.hi, c - deg.lo),
                                      "collect_grid: degenerate interval fails to intersect");
                        low = std::max(low, c - deg.hi);
                        up = std::min(up, c - deg.lo);
                        if (trace)
                            rec.sr_degenerate.push_back(deg);
                    }
                }
            }
            const CrossingEvent ev = advance(st);
            detail::check(ev.kind == CrossingEvent::Kind::FixedDeg2 ||
                              ev.kind == CrossingEvent::Kind::FixedDeg6,
                          "collect_grid: unexpected boundary crossing");
            if (options.per_event_recompute) {
                IntegerInterval j_rs, j_sr;
                ArcTableau u_rs, u_sr;
                evaluate(u_rs, u_sr, j_rs, j_sr);
                detail::check(u_rs == t_rs && u_sr == t_sr,
                              "collect_grid: arc tableaux must be constant on a half-interval");
                detail::check(j_rs == i_rs && j_sr == i_sr,
                              "collect_grid: arc intervals must be constant on a half-interval");
            }
        }

        detail::check(low < up, "collect_grid: empty (L,U) entry");
        grid.lower[hi] = low;
        grid.upper[hi] = up;
        if (trace) {
            rec.lower = low;
            rec.upper = up;
            trace->push_back(std::move(rec));
        }

        const CrossingEvent ev = advance(st);
        detail::check(ev.kind == (in_w ? CrossingEvent::Kind::CrossS : CrossingEvent::Kind::CrossR),
                      "collect_grid: expected an r/s boundary crossing");
    }

    // The closing s-crossing completed 2d-2 revolutions; the trajectory must
    // return to its start.
    detail::check(st.revolution() == 2 * d - 2 && st.moving_gap() == 0,
                  "collect_grid: run did not close after 2d-2 revolutions");
    detail::check(st.orientation() == options.initial_orientation,
                  "collect_grid: orientation did not close up");
    detail::check(current_diagram(st) == g, "collect_grid: matching did not return to its start");
    return grid;
}

}  // namespace netbounds
