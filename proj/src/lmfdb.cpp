#include "hypell/lmfdb.hpp"

#include <httplib.h>

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "hypell/errors.hpp"

namespace fs = std::filesystem;

namespace hypell {

namespace {

void validate_label(const std::string& label) {
    if (label.empty()) throw io_error("empty label");
    for (char c : label) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_'))
            throw io_error("label contains unexpected character: " + label);
    }
}

std::string now_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

long long_field(const Json& rec, const char* key) {
    const Json& v = rec.at(key);
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) return std::stol(v.get<std::string>());
    throw io_error(std::string("field ") + key + " is not an integer: " + v.dump());
}

RankRecord record_from_cache_json(const std::string& label, const Json& j) {
    RankRecord rec;
    try {
        rec.label = j.at("label").get<std::string>();
        rec.rank = long_field(j, "rank");
        for (const Json& t : j.value("torsion", Json::array())) rec.torsion.push_back(t.get<long>());
        for (const Json& g : j.value("generators", Json::array()))
            rec.generators.push_back(g.is_string() ? g.get<std::string>() : g.dump());
        rec.fetched_at = j.value("fetched_at", std::string());
        rec.source_url = j.value("source_url", std::string());
    } catch (const Json::exception& e) {
        throw io_error("corrupt cache record for " + label + ": " + e.what());
    }
    if (rec.label != label)
        throw io_error("cache record labeled " + rec.label + " found under " + label);
    rec.from_cache = true;
    return rec;
}

std::string http_get(const std::string& base_url, const std::string& path) {
    httplib::Client client(base_url);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    httplib::Result res = client.Get(path);
    if (!res)
        throw io_error("network error fetching " + base_url + path + ": " +
                       httplib::to_string(res.error()));
    if (res->status != 200)
        throw io_error("HTTP " + std::to_string(res->status) + " fetching " + base_url + path);
    return res->body;
}

} // namespace

std::string lmfdb_default_cache_dir() {
    if (const char* dir = std::getenv("HYPELL_CACHE_DIR")) return std::string(dir) + "/lmfdb";
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/hypell/lmfdb";
    return ".hypell-cache/lmfdb";
}

std::string lmfdb_query_url(const std::string& base_url, const std::string& label) {
    validate_label(label);
    size_t dots = 0;
    for (char c : label)
        if (c == '.') ++dots;
    if (dots == 1) return base_url + "/api/ec_curvedata/?lmfdb_label=" + label + "&_format=json";
    if (dots == 3) return base_url + "/api/g2c_curves/?label=" + label + "&_format=json";
    throw io_error("label " + label + " is neither an elliptic (one dot) nor a genus-2 "
                   "(three dots) curve label");
}

RankRecord lmfdb_parse_response(const std::string& label, const std::string& source_url,
                                const std::string& body) {
    Json j;
    try {
        j = Json::parse(body);
    } catch (const Json::parse_error& e) {
        throw io_error("response for " + label + " is not JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("data") || !j.at("data").is_array())
        throw io_error("response for " + label + " has no data array");
    const Json& data = j.at("data");
    if (data.empty()) throw io_error("label " + label + " not found in the database");

    const Json& row = data.at(0);
    RankRecord rec;
    rec.label = label;
    rec.source_url = source_url;
    bool have_rank = false;
    for (const char* key : {"rank", "mw_rank", "analytic_rank"}) {
        if (row.is_object() && row.contains(key)) {
            rec.rank = long_field(row, key);
            have_rank = true;
            break;
        }
    }
    if (!have_rank)
        throw io_error("record for " + label + " carries no rank field: " + row.dump());
    for (const char* key : {"torsion_structure", "torsion"}) {
        if (row.contains(key) && row.at(key).is_array()) {
            for (const Json& t : row.at(key))
                rec.torsion.push_back(t.is_string() ? std::stol(t.get<std::string>())
                                                    : t.get<long>());
            break;
        }
    }
    if (row.contains("gens") && row.at("gens").is_array())
        for (const Json& g : row.at("gens"))
            rec.generators.push_back(g.is_string() ? g.get<std::string>() : g.dump());
    return rec;
}

RankRecord lmfdb_fetch(const std::string& label, const LmfdbOptions& opts) {
    validate_label(label);
    fs::path cache_dir = opts.cache_dir.empty() ? lmfdb_default_cache_dir() : opts.cache_dir;
    fs::path cache_file = cache_dir / (label + ".json");

    if (!opts.refresh && fs::exists(cache_file)) {
        std::ifstream in(cache_file);
        Json j;
        try {
            in >> j;
        } catch (const Json::parse_error& e) {
            throw io_error("corrupt cache record " + cache_file.string() + ": " + e.what());
        }
        return record_from_cache_json(label, j);
    }

    if (opts.offline)
        throw io_error("offline mode and no cached record for " + label + " under " +
                       cache_dir.string());

    std::string url = lmfdb_query_url(opts.base_url, label);
    std::string path = url.substr(opts.base_url.size());
    std::string body = http_get(opts.base_url, path);

    RankRecord rec;
    try {
        rec = lmfdb_parse_response(label, url, body);
    } catch (const io_error&) {
        // keep the raw payload next to the cache for inspection
        std::error_code ec;
        fs::create_directories(cache_dir, ec);
        std::ofstream raw(cache_dir / (label + ".raw"));
        raw << body;
        throw;
    }
    rec.fetched_at = now_utc();

    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    std::ofstream out(cache_file);
    if (!out) throw io_error("cannot write cache record " + cache_file.string());
    out << rank_record_to_json(rec).dump(2) << "\n";
    return rec;
}

RankInput rank_input_from(const RankRecord& rec) {
    RankInput in;
    in.source = RankSource::Lmfdb;
    in.jacobian_rank = rec.rank;
    in.provenance = "lmfdb:" + rec.label + (rec.from_cache ? " (cache)" : " (network)");
    return in;
}

Json rank_record_to_json(const RankRecord& rec) {
    Json j;
    j["label"] = rec.label;
    j["rank"] = rec.rank;
    j["torsion"] = rec.torsion;
    j["generators"] = rec.generators;
    j["fetched_at"] = rec.fetched_at;
    j["source_url"] = rec.source_url;
    j["from_cache"] = rec.from_cache;
    return j;
}

} // namespace hypell
