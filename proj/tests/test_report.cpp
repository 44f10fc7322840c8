#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "netbounds/render.hpp"
#include "netbounds/report.hpp"
#include "netbounds/version.hpp"

using namespace netbounds;

namespace {

struct TempCacheDir {
    std::filesystem::path path;

    TempCacheDir() {
        path = std::filesystem::temp_directory_path() /
               ("netbounds-test-cache-" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
        ::setenv("NETBOUNDS_CACHE_DIR", path.c_str(), 1);
    }
    ~TempCacheDir() {
        std::filesystem::remove_all(path);
        ::unsetenv("NETBOUNDS_CACHE_DIR");
    }
};

}  // namespace

TEST_SUITE_BEGIN("report");

TEST_CASE("convention fingerprint is stable and orientation-sensitive") {
    const std::string a = convention_fingerprint();
    CHECK(a.size() == 16);
    CHECK(a == convention_fingerprint(+1));
    CHECK(a != convention_fingerprint(-1));
}

TEST_CASE("record json carries the named fields") {
    ResultRecord r;
    r.d = 4;
    r.k = 1;
    r.bound = 1;
    r.sum_v = 6;
    r.diagram_count = 5;
    r.elapsed_ms = 12;
    r.tool_version = std::string(kToolVersion);
    r.convention_fingerprint = convention_fingerprint();
    const std::string timed = record_json(r, true);
    CHECK(timed.find("\"sumV\":6") != std::string::npos);
    CHECK(timed.find("\"diagramCount\":5") != std::string::npos);
    CHECK(timed.find("elapsedMilliseconds") != std::string::npos);
    CHECK(record_json(r, false).find("elapsedMilliseconds") == std::string::npos);
}

TEST_CASE("cache round trip, corruption tolerance and key checks") {
    TempCacheDir tmp;
    CHECK(!cache_lookup(4, 1).has_value());

    ResultRecord r;
    r.d = 4;
    r.k = 1;
    r.bound = 1;
    r.sum_v = 6;
    r.diagram_count = 5;
    r.elapsed_ms = 3;
    r.tool_version = std::string(kToolVersion);
    r.convention_fingerprint = convention_fingerprint();
    cache_store(r);

    const auto loaded = cache_lookup(4, 1);
    REQUIRE(loaded.has_value());
    CHECK(loaded->bound == 1);
    CHECK(loaded->sum_v == 6);

    // no leftover temp files after the atomic rename
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
        ++files;
        CHECK(entry.path().extension() == ".json");
    }
    CHECK(files == 1);

    // corrupt the entry: lookup must shrug it off
    for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
        std::ofstream out(entry.path());
        out << "{ not json";
    }
    CHECK(!cache_lookup(4, 1).has_value());

    // violated bound/sum invariant is rejected too
    r.sum_v = 7;
    cache_store(r);
    CHECK(!cache_lookup(4, 1).has_value());
}

TEST_CASE("csv table matches the published slice") {
    TableOptions options;
    options.dmax = 5;
    options.use_cache = false;
    std::ostringstream out;
    write_table(out, options);
    CHECK(out.str() == "d,k,bound\n4,1,1\n4,2,1\n5,1,4\n5,2,2\n5,3,4\n");
}

TEST_CASE("table output is deterministic across jobs settings") {
    TableOptions one;
    one.dmax = 6;
    one.use_cache = false;
    one.jobs = 1;
    TableOptions four = one;
    four.jobs = 4;
    std::ostringstream a, b, c;
    write_table(a, one);
    write_table(b, four);
    write_table(c, one);
    CHECK(a.str() == b.str());
    CHECK(a.str() == c.str());
}

TEST_CASE("markdown and json table shapes") {
    TableOptions options;
    options.dmax = 5;
    options.use_cache = false;
    options.format = TableFormat::Markdown;
    std::ostringstream md;
    write_table(md, options);
    CHECK(md.str().find("| k \\ d | 4 | 5 |") == 0);
    CHECK(md.str().find("| 3 |  | 4 |") != std::string::npos);  // k=3 blank at d=4

    options.format = TableFormat::Json;
    std::ostringstream js;
    write_table(js, options);
    CHECK(js.str().find("\"bound\":1") != std::string::npos);
    CHECK(js.str().find("elapsedMilliseconds") == std::string::npos);
}

TEST_CASE("table rejects out-of-range dmax") {
    TableOptions options;
    options.dmax = 99;
    std::ostringstream out;
    CHECK_THROWS_AS(write_table(out, options), std::invalid_argument);
}

TEST_CASE("svg rendering") {
    const auto g = parse_diagram("(())()");
    const std::string svg = render_net_svg(g);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    std::size_t lines = 0;
    for (std::size_t at = svg.find("<line"); at != std::string::npos; at = svg.find("<line", at + 1))
        ++lines;
    CHECK(lines == 3);  // one per chord
    for (int p = 1; p <= 6; ++p)
        CHECK(svg.find(">" + std::to_string(p) + "</text>") != std::string::npos);

    const std::string shaded = render_net_svg(g, 1);
    CHECK(shaded.find(">r</text>") != std::string::npos);
    CHECK(shaded.find(">s</text>") != std::string::npos);
    CHECK(shaded.find("<path") != std::string::npos);

    CHECK_THROWS_AS(render_net_svg(g, 5), std::invalid_argument);
}

TEST_SUITE_END();
