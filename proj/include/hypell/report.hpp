#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hypell {

using Json = nlohmann::json;

// Origin of a reported quantity. Everything a command prints that looks
// like a number is tagged with one of these; computed-exact means the
// value was derived here in exact arithmetic, paper-quoted means it is
// restated from the published source for comparison, external-input means
// the caller (or a fetched database record) supplied it and we only
// consumed it.
enum class Provenance { ComputedExact, PaperQuoted, ExternalInput };

std::string provenance_str(Provenance p);

struct ProvenanceEntry {
    std::string claim;
    Provenance kind;
};

// Result record shared by every subcommand. The serialized shape is part
// of the interface; bump schema_version whenever a field changes meaning.
// ok is not serialized directly (the verdict text carries the outcome); it
// drives the process exit status.
struct Report {
    int schema_version = 1;
    std::string curve; // defining equation or label; empty when not curve-bound
    std::string operation;
    Json inputs = Json::object();
    std::string verdict;
    bool ok = true;
    std::vector<Json> witnesses;
    std::vector<Json> exceptional;
    std::vector<ProvenanceEntry> provenance;

    // Appends a named check: passing steps land in witnesses, failing ones
    // in exceptional, and ok accumulates the conjunction.
    void step(const std::string& name, bool pass, Json detail = Json());
    void witness(const std::string& name, Json detail);
    void claim(const std::string& what, Provenance kind);

    Json to_json() const;
    std::string to_table() const;

    // format is "json" or "table"; anything else is an io_error.
    std::string render(const std::string& format) const;
};

} // namespace hypell
