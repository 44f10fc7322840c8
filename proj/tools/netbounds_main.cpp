// Command-line front end: table generation, single bounds, per-net traces,
// the verification suite, and SVG rendering of nets.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "netbounds/closedforms.hpp"
#include "netbounds/counting.hpp"
#include "netbounds/errors.hpp"
#include "netbounds/render.hpp"
#include "netbounds/report.hpp"
#include "netbounds/verify.hpp"
#include "netbounds/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitMismatch = 3;

struct TraceArgs {
    int d = 0;
    int k = 0;
    std::string net;
    bool json = false;
};

std::string interval_text(const netbounds::IntegerInterval& i) {
    std::ostringstream s;
    s << "(" << i.lo << "," << i.hi << ")";
    return s.str();
}

int run_table(const netbounds::TableOptions& options) {
    netbounds::write_table(std::cout, options);
    return kExitOk;
}

int run_bound(int d, int k, bool both, int jobs, bool use_cache) {
    if (d < 3 || k < 1 || k > 2 * d - 4) {
        std::cerr << "bound: need d >= 3 and 1 <= k <= 2d-4\n";
        return kExitUsage;
    }
    netbounds::CountOptions options;
    options.jobs = jobs;

    const auto compute = [&](int kk) -> std::int64_t {
        if (use_cache)
            if (const auto cached = netbounds::cache_lookup(d, kk))
                return cached->bound;
        const netbounds::BoundReport report = netbounds::lower_bound(d, kk, options);
        if (use_cache)
            netbounds::cache_store(netbounds::to_record(report));
        return report.bound;
    };

    const std::int64_t bound = compute(k);
    std::cout << bound << "\n";
    if (both) {
        const int mirror_k = 2 * d - 3 - k;
        const std::int64_t mirror = compute(mirror_k);
        std::cout << "k=" << mirror_k << ": " << mirror << "\n";
        std::cout << "# bounds for k and 2d-3-k "
                  << (bound == mirror ? "agree" : "differ (informational only)") << "\n";
    }
    return kExitOk;
}

int run_trace(const TraceArgs& args) {
    const netbounds::ChordDiagram g = netbounds::parse_diagram(args.net);
    if (g.d() != args.d) {
        std::cerr << "trace: net has d=" << g.d() << " but d=" << args.d << " was given\n";
        return kExitUsage;
    }
    if (args.k < 1 || args.k > 2 * args.d - 4) {
        std::cerr << "trace: need 1 <= k <= 2d-4\n";
        return kExitUsage;
    }
    std::vector<netbounds::HalfIntervalRecord> records;
    const netbounds::BoundsGrid grid = netbounds::collect_grid(g, args.k, {}, &records);
    const auto extremum_points = netbounds::extrema(grid);
    const std::int64_t v = netbounds::v_of_grid(grid);

    std::vector<std::string> flags(records.size());
    for (const netbounds::ExtremumPoint& e : extremum_points)
        flags[e.index] = e.kind == netbounds::ExtremumPoint::Kind::Max ? "max" : "min";

    if (args.json) {
        std::ostringstream out;
        out << "{\n  \"net\": \"" << netbounds::format_diagram(g) << "\", \"d\": " << args.d
            << ", \"k\": " << args.k << ", \"c\": " << grid.c << ",\n  \"halfIntervals\": [\n";
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& r = records[i];
            out << "    {\"index\": " << r.index << ", \"label\": \""
                << (r.index % 2 == 0 ? "V" : "W") << r.index / 2 << "\", \"rs\": ["
                << r.rs.lo << "," << r.rs.hi << "], \"sr\": [" << r.sr.lo << "," << r.sr.hi
                << "], \"rsDegenerate\": [";
            for (std::size_t t = 0; t < r.rs_degenerate.size(); ++t)
                out << (t ? "," : "") << "[" << r.rs_degenerate[t].lo << ","
                    << r.rs_degenerate[t].hi << "]";
            out << "], \"srDegenerate\": [";
            for (std::size_t t = 0; t < r.sr_degenerate.size(); ++t)
                out << (t ? "," : "") << "[" << r.sr_degenerate[t].lo << ","
                    << r.sr_degenerate[t].hi << "]";
            out << "], \"L\": " << r.lower << ", \"U\": " << r.upper << ", \"extremum\": \""
                << flags[i] << "\"}" << (i + 1 < records.size() ? "," : "") << "\n";
        }
        out << "  ],\n  \"V\": " << v << "\n}\n";
        std::cout << out.str();
        return kExitOk;
    }

    std::cout << "net " << netbounds::format_diagram(g) << "  d=" << args.d << "  k=" << args.k
              << "  c=" << grid.c << "\n";
    std::cout << "  idx   rs=(l1,u1)   sr=(l2,u2)   degenerate          (L,U)    extremum\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        std::ostringstream label;
        label << (r.index % 2 == 0 ? "V" : "W") << r.index / 2;
        std::ostringstream deg;
        for (const auto& it : r.rs_degenerate)
            deg << "rs" << interval_text(it) << " ";
        for (const auto& it : r.sr_degenerate)
            deg << "sr" << interval_text(it) << " ";
        std::ostringstream line;
        line << "  " << label.str();
        for (std::size_t pad = label.str().size(); pad < 6; ++pad)
            line << ' ';
        line << interval_text(r.rs);
        for (std::size_t pad = interval_text(r.rs).size(); pad < 13; ++pad)
            line << ' ';
        line << interval_text(r.sr);
        for (std::size_t pad = interval_text(r.sr).size(); pad < 13; ++pad)
            line << ' ';
        std::string degs = deg.str();
        if (degs.empty())
            degs = "-";
        line << degs;
        for (std::size_t pad = degs.size(); pad < 20; ++pad)
            line << ' ';
        line << "(" << r.lower << "," << r.upper << ")";
        if (!flags[i].empty())
            line << "  <- " << flags[i];
        std::cout << line.str() << "\n";
    }
    std::cout << "V = " << v << "\n";
    return kExitOk;
}

int run_verify(const std::string& level, int jobs) {
    const netbounds::VerifyLevel lv =
        level == "full" ? netbounds::VerifyLevel::Full : netbounds::VerifyLevel::Fast;
    const auto results = netbounds::run_verification(lv, jobs, &std::cout);
    bool all_passed = true;
    for (const auto& r : results) {
        if (!r.passed) {
            all_passed = false;
            for (const auto& issue : r.issues)
                std::cout << "  mismatch [criterion " << r.id << "]: " << issue << "\n";
        }
    }
    std::cout << (all_passed ? "verification passed" : "verification FAILED") << "\n";
    return all_passed ? kExitOk : kExitMismatch;
}

int run_render(const std::string& net, const std::string& output, int k) {
    const netbounds::ChordDiagram g = netbounds::parse_diagram(net);
    const std::string svg = netbounds::render_net_svg(g, k);
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        std::cerr << "render: cannot open '" << output << "' for writing\n";
        return kExitUsage;
    }
    out << svg;
    if (!out.good()) {
        std::cerr << "render: failed writing '" << output << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified lower bounds on real rational functions with prescribed real "
                 "critical points and f(r) = f(s), by exhaustive net dynamics"};
    app.set_version_flag("--version", std::string(netbounds::kToolVersion));
    app.require_subcommand(1);

    netbounds::TableOptions table_options;
    std::string table_format = "csv";
    bool table_no_cache = false;
    CLI::App* table = app.add_subcommand("table", "emit bound(d, k) for all 4 <= d <= dmax");
    table->add_option("--dmax", table_options.dmax, "largest degree d")
        ->required()
        ->check(CLI::Range(4, 16));
    table->add_option("--format", table_format, "csv, markdown, or json")
        ->check(CLI::IsMember({"csv", "markdown", "json"}));
    table->add_option("--jobs", table_options.jobs, "worker threads (0 = hardware)");
    table->add_flag("--no-cache", table_no_cache, "ignore and do not write the result cache");

    int bound_d = 0, bound_k = 0, bound_jobs = 0;
    bool bound_both = false, bound_no_cache = false;
    CLI::App* bound = app.add_subcommand("bound", "single lower bound for (d, k)");
    bound->add_option("-d", bound_d, "degree")->required();
    bound->add_option("-k", bound_k, "critical points inside (r,s)")->required();
    bound->add_flag("--both", bound_both, "also compute k' = 2d-3-k and compare");
    bound->add_option("--jobs", bound_jobs, "worker threads (0 = hardware)");
    bound->add_flag("--no-cache", bound_no_cache, "ignore and do not write the result cache");

    TraceArgs trace_args;
    CLI::App* trace = app.add_subcommand("trace", "per-half-interval trace for one net");
    trace->add_option("-d", trace_args.d, "degree")->required();
    trace->add_option("-k", trace_args.k, "critical points inside (r,s)")->required();
    trace->add_option("--net", trace_args.net, "parenthesis word or pair list")->required();
    trace->add_flag("--json", trace_args.json, "emit the trace as JSON");

    std::string verify_level = "fast";
    int verify_jobs = 0;
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--level", verify_level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--jobs", verify_jobs, "worker threads (0 = hardware)");

    std::string render_net, render_output;
    int render_k = 0;
    CLI::App* render = app.add_subcommand("render", "render a net as SVG");
    render->add_option("--net", render_net, "parenthesis word or pair list")->required();
    render->add_option("-o,--output", render_output, "output SVG path")->required();
    render->add_option("-k", render_k, "shade the (r,s) arc for this k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help, --version
            app.exit(e);
            return kExitOk;
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table->parsed()) {
            table_options.use_cache = !table_no_cache;
            table_options.format = table_format == "markdown" ? netbounds::TableFormat::Markdown
                                   : table_format == "json"   ? netbounds::TableFormat::Json
                                                              : netbounds::TableFormat::Csv;
            return run_table(table_options);
        }
        if (bound->parsed())
            return run_bound(bound_d, bound_k, bound_both, bound_jobs, !bound_no_cache);
        if (trace->parsed())
            return run_trace(trace_args);
        if (verify->parsed())
            return run_verify(verify_level, verify_jobs);
        if (render->parsed())
            return run_render(render_net, render_output, render_k);
    } catch (const netbounds::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const netbounds::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
