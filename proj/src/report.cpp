#include "hypell/report.hpp"

#include <sstream>

#include "hypell/errors.hpp"

namespace hypell {

std::string provenance_str(Provenance p) {
    switch (p) {
        case Provenance::ComputedExact: return "computed-exact";
        case Provenance::PaperQuoted: return "paper-quoted";
        case Provenance::ExternalInput: return "external-input";
    }
    throw internal_error("unhandled provenance kind");
}

void Report::step(const std::string& name, bool pass, Json detail) {
    Json entry{{"step", name}, {"ok", pass}};
    if (!detail.is_null()) entry["detail"] = std::move(detail);
    if (pass)
        witnesses.push_back(std::move(entry));
    else
        exceptional.push_back(std::move(entry));
    ok = ok && pass;
}

void Report::witness(const std::string& name, Json detail) {
    witnesses.push_back(Json{{"step", name}, {"detail", std::move(detail)}});
}

void Report::claim(const std::string& what, Provenance kind) {
    provenance.push_back({what, kind});
}

Json Report::to_json() const {
    Json j;
    j["schema_version"] = schema_version;
    j["curve"] = curve;
    j["operation"] = operation;
    j["inputs"] = inputs;
    j["verdict"] = verdict;
    j["witnesses"] = witnesses;
    j["exceptional"] = exceptional;
    Json prov = Json::array();
    for (const ProvenanceEntry& e : provenance)
        prov.push_back(Json{{"claim", e.claim}, {"kind", provenance_str(e.kind)}});
    j["provenance"] = prov;
    return j;
}

namespace {

// One line per witness entry; named steps render as PASS/FAIL rows, bare
// payloads fall back to compact JSON.
void render_entries(std::ostringstream& out, const std::vector<Json>& entries, bool failing) {
    for (const Json& e : entries) {
        out << "  ";
        if (e.is_object() && e.contains("step")) {
            if (e.contains("ok"))
                out << (e.at("ok").get<bool>() ? "[PASS] " : "[FAIL] ");
            else if (failing)
                out << "[FAIL] ";
            out << e.at("step").get<std::string>();
            if (e.contains("detail")) {
                const Json& d = e.at("detail");
                out << ": " << (d.is_string() ? d.get<std::string>() : d.dump());
            }
        } else {
            out << e.dump();
        }
        out << "\n";
    }
}

} // namespace

std::string Report::to_table() const {
    std::ostringstream out;
    out << "operation: " << operation << "\n";
    if (!curve.empty()) out << "curve: " << curve << "\n";
    if (!inputs.empty()) {
        out << "inputs:\n";
        for (const auto& [key, value] : inputs.items())
            out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
    if (!witnesses.empty()) {
        out << "witnesses:\n";
        render_entries(out, witnesses, false);
    }
    if (!exceptional.empty()) {
        out << "exceptional:\n";
        render_entries(out, exceptional, true);
    }
    if (!provenance.empty()) {
        out << "provenance:\n";
        for (const ProvenanceEntry& e : provenance)
            out << "  " << provenance_str(e.kind) << ": " << e.claim << "\n";
    }
    out << "verdict: " << verdict << "\n";
    return out.str();
}

std::string Report::render(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    if (format == "table") return to_table();
    throw io_error("unknown output format: " + format + " (expected json or table)");
}

} // namespace hypell
