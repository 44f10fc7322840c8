#pragma once

// Result records, the convention fingerprint, the advisory JSON cache, and
// the table writers used by the CLI.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "netbounds/counting.hpp"

namespace netbounds {

struct ResultRecord {
    int d = 0;
    int k = 0;
    std::int64_t bound = 0;
    std::int64_t sum_v = 0;
    std::int64_t diagram_count = 0;
    std::int64_t elapsed_ms = 0;
    std::string tool_version;
    std::string convention_fingerprint;
};

/// Stable hash of the sign/orientation conventions baked into the core;
/// results computed under different conventions never share cache entries.
std::string convention_fingerprint(int initial_orientation = +1);

ResultRecord to_record(const BoundReport& report, int initial_orientation = +1);

/// Serialized record with the spec'd field names; `with_timing` drops
/// elapsedMilliseconds so listings stay byte-identical across runs.
std::string record_json(const ResultRecord& record, bool with_timing);

/// NETBOUNDS_CACHE_DIR, or .netbounds-cache under the current directory.
std::filesystem::path cache_directory();

/// Returns the cached record for (d, k) under the current conventions and
/// tool version, or nothing. Corrupt or mismatched entries are ignored; the
/// cache is advisory.
std::optional<ResultRecord> cache_lookup(int d, int k, int initial_orientation = +1);

/// Best-effort atomic store (temp file then rename); IO failures are
/// swallowed.
void cache_store(const ResultRecord& record);

enum class TableFormat { Csv, Markdown, Json };

struct TableOptions {
    int dmax = 14;
    TableFormat format = TableFormat::Csv;
    int jobs = 0;
    bool use_cache = true;
};

/// Emits bound(d, k) for 4 <= d <= dmax, 1 <= k <= d-2, ordered by (d, k).
/// Output depends only on dmax and format.
void write_table(std::ostream& out, const TableOptions& options);

}  // namespace netbounds
