#include "netbounds/report.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "netbounds/errors.hpp"
#include "netbounds/version.hpp"

namespace netbounds {

namespace {

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex16(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

}  // namespace

std::string convention_fingerprint(int initial_orientation) {
    std::string summary =
        "layout=s,M,F1..F,r,F..F;orient-anchor=ccw-of-r;sr-orient=alternation;"
        "c-anchor=cw-of-r;c=E-O-1;deg-parity=(i-1)mod2;enum=lex-paren;eps0=";
    summary += initial_orientation > 0 ? "+1" : "-1";
    return hex16(fnv1a(summary));
}

ResultRecord to_record(const BoundReport& report, int initial_orientation) {
    ResultRecord r;
    r.d = report.d;
    r.k = report.k;
    r.bound = report.bound;
    r.sum_v = report.sum_v;
    r.diagram_count = report.diagram_count;
    r.elapsed_ms = report.elapsed_ms;
    r.tool_version = std::string(kToolVersion);
    r.convention_fingerprint = convention_fingerprint(initial_orientation);
    return r;
}

std::string record_json(const ResultRecord& record, bool with_timing) {
    nlohmann::ordered_json j;
    j["d"] = record.d;
    j["k"] = record.k;
    j["bound"] = record.bound;
    j["sumV"] = record.sum_v;
    j["diagramCount"] = record.diagram_count;
    if (with_timing)
        j["elapsedMilliseconds"] = record.elapsed_ms;
    j["toolVersion"] = record.tool_version;
    j["conventionFingerprint"] = record.convention_fingerprint;
    return j.dump();
}

std::filesystem::path cache_directory() {
    if (const char* env = std::getenv("NETBOUNDS_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(".netbounds-cache");
}

namespace {

std::filesystem::path cache_file(int d, int k, const std::string& fingerprint) {
    std::ostringstream name;
    name << "bound-d" << d << "-k" << k << "-" << fingerprint << ".json";
    return cache_directory() / name.str();
}

}  // namespace

std::optional<ResultRecord> cache_lookup(int d, int k, int initial_orientation) {
    const std::string fingerprint = convention_fingerprint(initial_orientation);
    std::ifstream in(cache_file(d, k, fingerprint));
    if (!in)
        return std::nullopt;
    try {
        const nlohmann::json j = nlohmann::json::parse(in);
        ResultRecord r;
        r.d = j.at("d").get<int>();
        r.k = j.at("k").get<int>();
        r.bound = j.at("bound").get<std::int64_t>();
        r.sum_v = j.at("sumV").get<std::int64_t>();
        r.diagram_count = j.at("diagramCount").get<std::int64_t>();
        r.elapsed_ms = j.value("elapsedMilliseconds", std::int64_t{0});
        r.tool_version = j.at("toolVersion").get<std::string>();
        r.convention_fingerprint = j.at("conventionFingerprint").get<std::string>();
        if (r.d != d || r.k != k || r.tool_version != kToolVersion ||
            r.convention_fingerprint != fingerprint)
            return std::nullopt;
        if (r.bound * (2 * static_cast<std::int64_t>(d) - 2) != r.sum_v)
            return std::nullopt;
        return r;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;  // corrupt entries are simply recomputed
    }
}

void cache_store(const ResultRecord& record) {
    try {
        const std::filesystem::path target =
            cache_file(record.d, record.k, record.convention_fingerprint);
        std::filesystem::create_directories(target.parent_path());
        std::random_device rd;
        const std::filesystem::path temp =
            target.parent_path() / (target.filename().string() + ".tmp" + std::to_string(rd()));
        {
            std::ofstream out(temp);
            if (!out)
                return;
            out << record_json(record, /*with_timing=*/true) << "\n";
        }
        std::filesystem::rename(temp, target);
    } catch (const std::exception&) {
        // advisory only
    }
}

void write_table(std::ostream& out, const TableOptions& options) {
    if (options.dmax < 4 || options.dmax > 16)
        throw std::invalid_argument("table: dmax must satisfy 4 <= dmax <= 16");

    std::vector<ResultRecord> records;
    for (int d = 4; d <= options.dmax; ++d) {
        CountOptions count_options;
        count_options.jobs = options.jobs;
        std::optional<BoundComputer> computer;
        for (int k = 1; k <= d - 2; ++k) {
            if (options.use_cache) {
                if (auto cached = cache_lookup(d, k)) {
                    records.push_back(*cached);
                    continue;
                }
            }
            if (!computer)
                computer.emplace(d, count_options);
            const ResultRecord record = to_record(computer->run(k));
            if (options.use_cache)
                cache_store(record);
            records.push_back(record);
        }
    }

    switch (options.format) {
        case TableFormat::Csv: {
            out << "d,k,bound\n";
            for (const ResultRecord& r : records)
                out << r.d << "," << r.k << "," << r.bound << "\n";
            break;
        }
        case TableFormat::Markdown: {
            out << "| k \\ d |";
            for (int d = 4; d <= options.dmax; ++d)
                out << " " << d << " |";
            out << "\n|---|";
            for (int d = 4; d <= options.dmax; ++d)
                out << "---|";
            out << "\n";
            for (int k = 1; k <= options.dmax - 2; ++k) {
                out << "| " << k << " |";
                for (int d = 4; d <= options.dmax; ++d) {
                    out << " ";
                    for (const ResultRecord& r : records)
                        if (r.d == d && r.k == k)
                            out << r.bound;
                    out << " |";
                }
                out << "\n";
            }
            break;
        }
        case TableFormat::Json: {
            out << "[\n";
            for (std::size_t i = 0; i < records.size(); ++i)
                out << "  " << record_json(records[i], /*with_timing=*/false)
                    << (i + 1 < records.size() ? "," : "") << "\n";
            out << "]\n";
            break;
        }
    }
}

}  // namespace netbounds
