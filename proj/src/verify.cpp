#include "netbounds/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "netbounds/closedforms.hpp"
#include "netbounds/counting.hpp"
#include "netbounds/errors.hpp"

namespace netbounds {

const std::vector<ReferenceEntry>& reference_table() {
    static const std::vector<ReferenceEntry> table = [] {
        // Row k, columns d = 4..14; 0 marks absent cells (k > d-2).
        struct Row {
            int k;
            std::int64_t bounds[11];
        };
        static constexpr Row kRows[] = {
            {1, {1, 4, 14, 48, 165, 572, 2002, 7072, 25194, 90440, 326876}},
            {2, {1, 2, 6, 18, 57, 186, 622, 2120, 7338, 25724, 91144}},
            {3, {0, 4, 12, 36, 113, 366, 1216, 4122, 14202, 49592, 175124}},
            {4, {0, 0, 12, 34, 107, 348, 1156, 3920, 13514, 47212, 166788}},
            {5, {0, 0, 0, 36, 115, 372, 1232, 4166, 14326, 49950, 176178}},
            {6, {0, 0, 0, 0, 117, 370, 1232, 4164, 14326, 49920, 175978}},
            {7, {0, 0, 0, 0, 0, 370, 1224, 4104, 14024, 48610, 170606}},
            {8, {0, 0, 0, 0, 0, 0, 1244, 4134, 14176, 49188, 172660}},
            {9, {0, 0, 0, 0, 0, 0, 0, 4098, 13948, 48030, 167690}},
            {10, {0, 0, 0, 0, 0, 0, 0, 0, 14106, 48348, 169326}},
            {11, {0, 0, 0, 0, 0, 0, 0, 0, 0, 47904, 166630}},
            {12, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 168000}},
        };
        std::vector<ReferenceEntry> entries;
        for (int d = 4; d <= 14; ++d)
            for (const Row& row : kRows)
                if (row.k <= d - 2)
                    entries.push_back({d, row.k, row.bounds[d - 4]});
        return entries;
    }();
    return table;
}

std::int64_t reference_bound(int d, int k) {
    for (const ReferenceEntry& e : reference_table())
        if (e.d == d && e.k == k)
            return e.bound;
    throw std::out_of_range("reference_bound: no entry for the given (d, k)");
}

namespace {

struct Context {
    VerifyLevel level;
    int jobs;
    std::ostream* log;
    std::map<std::pair<int, int>, std::int64_t> computed;
    bool internal_error = false;
    std::string internal_error_what;
};

void note(Context& ctx, const std::string& line) {
    if (ctx.log)
        *ctx.log << "  " << line << "\n";
}

template <typename Fn>
CriterionResult run_criterion(Context& ctx, int id, const std::string& name, Fn&& body) {
    CriterionResult result;
    result.id = id;
    result.name = name;
    const auto started = std::chrono::steady_clock::now();
    try {
        body(result.issues);
    } catch (const InternalError& err) {
        ctx.internal_error = true;
        ctx.internal_error_what = err.what();
        result.issues.push_back(std::string("internal assertion: ") + err.what());
    } catch (const std::exception& err) {
        result.issues.push_back(std::string("unexpected error: ") + err.what());
    }
    result.passed = result.issues.empty();
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    if (ctx.log)
        *ctx.log << "criterion " << id << " (" << name << "): "
                 << (result.passed ? "PASS" : "FAIL") << " [" << result.elapsed_ms << " ms]\n";
    return result;
}

std::string entry_name(int d, int k) {
    std::ostringstream s;
    s << "(d=" << d << ", k=" << k << ")";
    return s.str();
}

void criterion_table(Context& ctx, std::vector<std::string>& issues) {
    const int dmax = ctx.level == VerifyLevel::Full ? 14 : 8;
    CountOptions options;
    options.jobs = ctx.jobs;
    for (int d = 4; d <= dmax; ++d) {
        const BoundComputer computer(d, options);
        for (int k = 1; k <= d - 2; ++k) {
            const BoundReport report = computer.run(k);
            ctx.computed[{d, k}] = report.bound;
            const std::int64_t expected = reference_bound(d, k);
            if (report.bound != expected) {
                std::ostringstream s;
                s << entry_name(d, k) << ": computed " << report.bound << ", published "
                  << expected;
                issues.push_back(s.str());
            }
            if (report.bound * (2 * d - 2) != report.sum_v)
                issues.push_back(entry_name(d, k) + ": bound*(2d-2) != sumV");
        }
        note(ctx, "table row d=" + std::to_string(d) + " done");
    }
}

void criterion_k1(Context& ctx, std::vector<std::string>& issues) {
    const int dmax = ctx.level == VerifyLevel::Full ? 14 : 10;
    CountOptions options;
    options.jobs = ctx.jobs;
    for (int d = 4; d <= dmax; ++d) {
        std::int64_t bound;
        if (const auto it = ctx.computed.find({d, 1}); it != ctx.computed.end()) {
            bound = it->second;
        } else {
            bound = lower_bound(d, 1, options).bound;
            ctx.computed[{d, 1}] = bound;
        }
        if (bound != k1_bound(d)) {
            std::ostringstream s;
            s << "d=" << d << ": bound " << bound << " != u_d - 2u_{d-1} = " << k1_bound(d);
            issues.push_back(s.str());
        }
    }
}

void criterion_k2(Context& ctx, std::vector<std::string>& issues) {
    static constexpr std::int64_t kExpected[] = {1, 2, 6, 18, 57};
    CountOptions options;
    options.jobs = ctx.jobs;
    for (int d = 4; d <= 8; ++d) {
        const std::int64_t closed = script_n(d);
        if (closed != kExpected[d - 4]) {
            std::ostringstream s;
            s << "script_n(" << d << ") = " << closed << ", expected " << kExpected[d - 4];
            issues.push_back(s.str());
        }
        std::int64_t bound;
        if (const auto it = ctx.computed.find({d, 2}); it != ctx.computed.end())
            bound = it->second;
        else
            bound = lower_bound(d, 2, options).bound;
        if (closed != bound)
            issues.push_back("script_n(" + std::to_string(d) + ") != computed k=2 bound");
        if (closed != reference_bound(d, 2))
            issues.push_back("script_n(" + std::to_string(d) + ") != published k=2 bound");
    }
}

void criterion_inclusion_exclusion(Context&, std::vector<std::string>& issues) {
    for (int d = 4; d <= 12; ++d) {
        for (int j = 2; j <= std::min(6, d - 2); ++j) {
            if (nk(d, j) != nk_enumerated(d, j)) {
                std::ostringstream s;
                s << "nk(" << d << ", " << j << ") closed form " << nk(d, j)
                  << " != enumeration " << nk_enumerated(d, j);
                issues.push_back(s.str());
            }
        }
        if (script_n(d) != script_n_enumerated(d))
            issues.push_back("script_n(" + std::to_string(d) + ") != direct enumeration");
    }
}

void criterion_k1_oracle(Context&, std::vector<std::string>& issues) {
    for (int d = 3; d <= 7; ++d) {
        std::vector<std::int64_t> values;
        for (const ChordDiagram& g : enumerate_diagrams(d)) {
            const std::int64_t v = v_of_net(g, 1);
            values.push_back(v);
            if (v != neighbor_free_count(g)) {
                std::ostringstream s;
                s << "d=" << d << " net " << format_diagram(g) << ": V = " << v
                  << " != neighbour-free count " << neighbor_free_count(g);
                issues.push_back(s.str());
            }
        }
        if (d == 4) {
            std::sort(values.begin(), values.end());
            if (values != std::vector<std::int64_t>{0, 0, 2, 2, 2})
                issues.push_back("d=4, k=1 per-net V multiset is not {0,0,2,2,2}");
        }
    }
    // The neighbour-free counts summed over all diagrams recover the closed
    // form (d <= 9).
    for (int d = 4; d <= 9; ++d) {
        std::int64_t sum = 0;
        enumerate_diagrams(d, [&](const ChordDiagram& g) { sum += neighbor_free_count(g); });
        if (sum != (2 * d - 2) * k1_bound(d))
            issues.push_back("neighbour-free sum != (2d-2) * closed form at d=" +
                             std::to_string(d));
    }
}

void check_reachable_tableaux(int d, std::vector<std::string>& issues) {
    // Walk every trajectory explicitly and test the width/mirror/inclusion
    // identities at each sub-configuration, and the degenerate rules at each
    // both-exit coincidence.
    for (const ChordDiagram& g : enumerate_diagrams(d)) {
        for (int k = 1; k <= 2 * d - 4; ++k) {
            TrajectoryState st = initial_state(g, k);
            const std::int64_t c = st.winding();
            const int events = (2 * d - 2) * (2 * d - 1);
            for (int step = 0; step < events; ++step) {
                const ArcTableau rs = arc_tableau(st, Arc::RS);
                const ArcTableau sr = arc_tableau(st, Arc::SR);
                for (const ArcTableau* t : {&rs, &sr}) {
                    const IntegerInterval plus = interval_nondegenerate(*t, +1);
                    const IntegerInterval minus = interval_nondegenerate(*t, -1);
                    if (plus.hi - plus.lo != t->exiting + 1)
                        issues.push_back("nondegenerate width != m + 1");
                    if (minus.lo != -plus.hi || minus.hi != -plus.lo)
                        issues.push_back("orientation flip is not the mirror");
                }
                const int orient_rs = st.orientation();
                const int orient_sr = rs.n % 2 == 0 ? orient_rs : -orient_rs;
                const IntegerInterval i1 = interval_nondegenerate(rs, orient_rs);
                const IntegerInterval i2 = interval_nondegenerate(sr, orient_sr);
                if (st.moving_in_rs() && !(i1.lo >= c - i2.hi && i1.hi <= c - i2.lo))
                    issues.push_back("W sub-configuration not contained in reflected interval");

                const int y = st.next_crossing_vertex();
                ArcTableau before;
                Arc deg_arc = Arc::RS;
                bool deg = false;
                Parity parity = Parity::Even;
                if (y != 0 && st.partner_of(TrajectoryState::kMovingVertex) != y) {
                    deg_arc = st.moving_in_rs() ? Arc::RS : Arc::SR;
                    const int a = st.partner_of(TrajectoryState::kMovingVertex);
                    const int b = st.partner_of(y);
                    if (!st.in_arc(a, deg_arc) && !st.in_arc(b, deg_arc)) {
                        deg = true;
                        std::tie(before, parity) = degenerate_arc_tableau(st, y, deg_arc);
                        const IntegerInterval dg = interval_degenerate(before, parity, +1);
                        if (dg.hi - dg.lo != before.exiting || before.exiting < 2)
                            issues.push_back("degenerate width != m or m < 2");
                        const IntegerInterval base = interval_nondegenerate(before, +1);
                        if (!(dg.lo >= base.lo && dg.hi <= base.hi))
                            issues.push_back("degenerate interval not inside nondegenerate one");
                    }
                }
                advance(st);
                if (deg && arc_tableau(st, deg_arc) != before)
                    issues.push_back("degenerate tableau differs across the event");
                if (issues.size() > 8)
                    return;
            }
        }
    }
}

void criterion_properties(Context& ctx, std::vector<std::string>& issues) {
    // Enumeration counts are Catalan numbers (d <= 8).
    for (int d = 2; d <= 8; ++d) {
        std::int64_t count = 0;
        enumerate_diagrams(d, [&](const ChordDiagram&) { ++count; });
        if (count != catalan_u(d))
            issues.push_back("enumeration count != catalan_u(" + std::to_string(d) + ")");
    }
    note(ctx, "enumeration counts ok");

    // Tableau bijection round trips and shift order (d <= 6).
    for (int d = 2; d <= 6; ++d) {
        std::set<std::uint64_t> seen;
        std::set<std::uint64_t> shifted;
        for (const ChordDiagram& g : enumerate_diagrams(d)) {
            if (from_tableau(to_tableau(g)) != g)
                issues.push_back("tableau round trip failed at " + format_diagram(g));
            seen.insert(detail::diagram_word(g));
            shifted.insert(detail::diagram_word(shift(g)));
            int order = 1;
            ChordDiagram h = shift(g);
            while (!(h == g)) {
                h = shift(h);
                ++order;
            }
            if ((2 * d - 2) % order != 0)
                issues.push_back("shift order does not divide 2d-2 at " + format_diagram(g));
        }
        if (seen != shifted)
            issues.push_back("shift is not a bijection on diagrams of d=" + std::to_string(d));
    }
    note(ctx, "bijection and shift order ok");

    // Orbits partition the diagram set with periods dividing 2d-2 (d <= 8).
    for (int d = 2; d <= 8; ++d) {
        std::int64_t total = 0;
        for (const Orbit& orbit : orbits(d)) {
            total += orbit.period;
            if ((2 * d - 2) % orbit.period != 0)
                issues.push_back("orbit period does not divide 2d-2");
        }
        if (total != catalan_u(d))
            issues.push_back("orbit periods do not sum to catalan_u(" + std::to_string(d) + ")");
    }
    note(ctx, "orbit partition ok");

    // V invariance under shift (d <= 6, all k) and under the mirrored
    // orientation (d <= 5, all k); grids agree between the fast path and the
    // per-event differential mode (d <= 6).
    GridOptions per_event;
    per_event.per_event_recompute = true;
    GridOptions mirrored;
    mirrored.initial_orientation = -1;
    for (int d = 3; d <= 6; ++d) {
        for (const ChordDiagram& g : enumerate_diagrams(d)) {
            for (int k = 1; k <= 2 * d - 4; ++k) {
                const BoundsGrid fast = collect_grid(g, k);
                const BoundsGrid slow = collect_grid(g, k, per_event);
                if (fast.lower != slow.lower || fast.upper != slow.upper)
                    issues.push_back("per-event recompute grid differs at " + format_diagram(g));
                if (fast.size() != 4 * d - 4)
                    issues.push_back("grid size != 4d-4");
                const std::int64_t v = v_of_grid(fast);
                if (v != v_of_net(shift(g), k))
                    issues.push_back("V not shift-invariant at " + format_diagram(g));
                if (d <= 5 && v != v_of_net(g, k, mirrored))
                    issues.push_back("V not orientation-flip invariant at " + format_diagram(g));
                if (issues.size() > 8)
                    return;
            }
        }
    }
    note(ctx, "V invariances ok");

    // Width, mirror, W-inclusion and degenerate-event identities over every
    // reachable tableau (d <= 6 exhaustive; degenerate checks cover d <= 5
    // and ride along at 6).
    for (int d = 3; d <= 6; ++d)
        check_reachable_tableaux(d, issues);
    note(ctx, "reachable tableau identities ok");

    // Sum of V divisible by 2d-2 for all k (d <= 8), and the orbit-reduced
    // sum equals the naive sum (d <= 7).
    for (int d = 3; d <= 8; ++d) {
        CountOptions reduced;
        reduced.jobs = ctx.jobs;
        CountOptions naive;
        naive.jobs = ctx.jobs;
        naive.orbit_reduction = false;
        const BoundComputer reduced_computer(d, reduced);
        const BoundComputer naive_computer(d, naive);
        for (int k = 1; k <= 2 * d - 4; ++k) {
            const BoundReport a = reduced_computer.run(k);  // divisibility checked inside
            if (d <= 7) {
                const BoundReport b = naive_computer.run(k);
                if (a.sum_v != b.sum_v || a.bound != b.bound)
                    issues.push_back("orbit-reduced sum differs from naive sum at d=" +
                                     std::to_string(d) + ", k=" + std::to_string(k));
            }
        }
    }
    note(ctx, "divisibility and orbit reduction ok");

    // k=1 interval catalogue and forbidden triples; k=2 max points sit on
    // (0,2) intervals (d <= 6).
    const std::vector<std::pair<std::int64_t, std::int64_t>> catalogue = {
        {-1, 1}, {-1, 0}, {0, 1}, {-2, 0}, {0, 2}};
    const std::vector<std::array<std::pair<std::int64_t, std::int64_t>, 3>> forbidden = [&] {
        using P = std::pair<std::int64_t, std::int64_t>;
        std::vector<std::array<P, 3>> f = {
            {P{0, 1}, P{-1, 1}, P{-1, 0}},
            {P{0, 1}, P{-1, 1}, P{-2, 0}},
            {P{0, 2}, P{-1, 1}, P{-1, 0}},
        };
        const std::size_t direct = f.size();
        for (std::size_t i = 0; i < direct; ++i)
            f.push_back({f[i][2], f[i][1], f[i][0]});
        return f;
    }();
    for (int d = 3; d <= 6; ++d) {
        for (const ChordDiagram& g : enumerate_diagrams(d)) {
            const BoundsGrid grid = collect_grid(g, 1);
            std::vector<std::pair<std::int64_t, std::int64_t>> entries;
            for (int i = 0; i < grid.size(); ++i)
                entries.push_back({grid.lower[i], grid.upper[i]});
            for (const auto& entry : entries)
                if (std::find(catalogue.begin(), catalogue.end(), entry) == catalogue.end())
                    issues.push_back("k=1 grid entry outside the five-interval catalogue");
            for (int i = 0; i < grid.size(); ++i) {
                const std::array triple = {entries[i], entries[(i + 1) % grid.size()],
                                           entries[(i + 2) % grid.size()]};
                for (const auto& bad : forbidden)
                    if (triple == bad)
                        issues.push_back("forbidden k=1 interval triple occurs");
            }
            if (d >= 4) {
                const BoundsGrid grid2 = collect_grid(g, 2);
                for (const ExtremumPoint& e : extrema(grid2))
                    if (e.kind == ExtremumPoint::Kind::Max &&
                        !(grid2.lower[e.index] == 0 && grid2.upper[e.index] == 2))
                        issues.push_back("k=2 max point not on a (0,2) interval");
            }
            if (issues.size() > 8)
                return;
        }
    }
    note(ctx, "interval catalogue ok");

    // The reference walk-through: a net whose only min point is W_2 with
    // U = 0 and only max point W_5 with L = 0, c = 0 and V = 2.
    bool found = false;
    for (int d = 4; d <= 5 && !found; ++d) {
        for (const ChordDiagram& g : enumerate_diagrams(d)) {
            for (int k = 1; k <= 2 * d - 4 && !found; ++k) {
                const BoundsGrid grid = collect_grid(g, k);
                if (grid.c != 0)
                    continue;
                const std::vector<ExtremumPoint> ext = extrema(grid);
                if (ext.size() != 2)
                    continue;
                const ExtremumPoint& mn =
                    ext[0].kind == ExtremumPoint::Kind::Min ? ext[0] : ext[1];
                const ExtremumPoint& mx =
                    ext[0].kind == ExtremumPoint::Kind::Max ? ext[0] : ext[1];
                if (mn.index == 5 && mn.level == 0 && mx.index == 11 && mx.level == 0 &&
                    v_of_grid(grid) == 2) {
                    found = true;
                    note(ctx, "reference extrema signature realized at d=" + std::to_string(d) +
                                  ", k=" + std::to_string(k) + ", net " + format_diagram(g));
                }
            }
            if (found)
                break;
        }
    }
    if (!found)
        issues.push_back("no net realizes the reference extrema signature (min W_2, max W_5)");
}

}  // namespace

std::vector<CriterionResult> run_verification(VerifyLevel level, int jobs, std::ostream* log) {
    Context ctx{level, jobs, log, {}, false, {}};
    std::vector<CriterionResult> results;
    const char* scope = level == VerifyLevel::Full ? "d <= 14" : "d <= 8";
    results.push_back(run_criterion(ctx, 1, std::string("table reproduction, ") + scope,
                                    [&](auto& issues) { criterion_table(ctx, issues); }));
    results.push_back(run_criterion(ctx, 2, "k=1 closed form u_d - 2u_{d-1}",
                                    [&](auto& issues) { criterion_k1(ctx, issues); }));
    results.push_back(run_criterion(ctx, 3, "k=2 closed form script-N",
                                    [&](auto& issues) { criterion_k2(ctx, issues); }));
    results.push_back(run_criterion(ctx, 4, "inclusion-exclusion identities", [&](auto& issues) {
        criterion_inclusion_exclusion(ctx, issues);
    }));
    results.push_back(run_criterion(ctx, 5, "per-net k=1 oracle",
                                    [&](auto& issues) { criterion_k1_oracle(ctx, issues); }));
    results.push_back(run_criterion(ctx, 6, "property suite",
                                    [&](auto& issues) { criterion_properties(ctx, issues); }));
    results.push_back(run_criterion(ctx, 7, "zero internal assertions", [&](auto& issues) {
        if (ctx.internal_error)
            issues.push_back("internal assertion tripped: " + ctx.internal_error_what);
    }));
    return results;
}

}  // namespace netbounds
