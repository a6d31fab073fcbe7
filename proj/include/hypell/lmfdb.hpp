#pragma once

#include <string>
#include <vector>

#include "hypell/degsets.hpp"
#include "hypell/report.hpp"

namespace hypell {

// Mordell-Weil data for a curve (or its Jacobian) keyed by an LMFDB
// label. Rank and torsion are taken verbatim from the database; nothing
// here recomputes or certifies them, which is why every consumer tags
// them external-input.
struct RankRecord {
    std::string label;
    long rank = 0;
    std::vector<long> torsion;           // invariant factors, as listed
    std::vector<std::string> generators; // optional, as printed by the database
    std::string fetched_at;              // UTC, ISO 8601
    std::string source_url;
    bool from_cache = false;
};

struct LmfdbOptions {
    std::string cache_dir; // empty = lmfdb_default_cache_dir()
    bool offline = false;  // never touch the network; cold cache is an error
    bool refresh = false;  // refetch and rewrite the cached record
    std::string base_url = "https://www.lmfdb.org";
};

// $HYPELL_CACHE_DIR/lmfdb when the variable is set, otherwise
// ~/.cache/hypell/lmfdb.
std::string lmfdb_default_cache_dir();

// Labels with one dot are elliptic curves ("37.a1"), three dots genus-2
// curves ("169.a.169.1"); each maps to the matching API table.
std::string lmfdb_query_url(const std::string& base_url, const std::string& label);

// Extracts a RankRecord from an API response body. Throws io_error when
// the payload is not JSON, has no matching record, or lacks a rank field.
RankRecord lmfdb_parse_response(const std::string& label, const std::string& source_url,
                                const std::string& body);

// Cache-first fetch. A cached record is immutable: it is served as-is
// until a refresh is forced. On a parse failure the raw payload is kept
// next to the cache (<label>.raw) for inspection.
RankRecord lmfdb_fetch(const std::string& label, const LmfdbOptions& opts);

// Bridge into the degree-set rules.
RankInput rank_input_from(const RankRecord& rec);

Json rank_record_to_json(const RankRecord& rec);

} // namespace hypell
