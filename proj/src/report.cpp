#include <gerstlab/report.hpp>

#include <json.hpp>

#include <algorithm>

namespace gerstlab {

void SuiteReport::add(std::string id, bool pass, std::string witness) {
    for (const auto& c : checks)
        if (c.id == id) throw input_error("SuiteReport: duplicate check id " + id);
    CheckResult r;
    r.id = std::move(id);
    r.pass = pass;
    if (!pass) r.witness = std::move(witness);
    checks.push_back(std::move(r));
}

bool SuiteReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

nlohmann::json report_json(const SuiteReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["pass"] = r.ok();
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json cj;
        cj["id"] = c.id;
        cj["pass"] = c.pass;
        if (!c.pass) cj["witness"] = c.witness;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

std::string report_markdown(const SuiteReport& r) {
    std::string out = "## " + r.suite + "\n\n";
    for (const auto& c : r.checks) {
        out += std::string("- ") + (c.pass ? "[pass] " : "[FAIL] ") + c.id;
        if (!c.pass && !c.witness.empty()) out += "  (witness: " + c.witness + ")";
        out += "\n";
    }
    out += r.ok() ? "\nall checks passed\n" : "\nsome checks FAILED\n";
    return out;
}

}  // namespace

std::string emit_report(const SuiteReport& r, ReportFormat format) {
    if (format == ReportFormat::json) return report_json(r).dump(2) + "\n";
    return report_markdown(r);
}

std::string emit_reports(const std::vector<SuiteReport>& rs, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rs) j.push_back(report_json(r));
        return j.dump(2) + "\n";
    }
    std::string out;
    for (const auto& r : rs) out += report_markdown(r) + "\n";
    return out;
}

}  // namespace gerstlab
