#pragma once
#include <gerstlab/rational.hpp>

#include <string>
#include <vector>

namespace gerstlab {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string witness;  // nonempty iff the check failed
    double millis = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    void add(std::string id, bool pass, std::string witness = "");
    bool ok() const;
};

enum class ReportFormat { json, markdown };

// Deterministic, byte-stable serialization: sorted keys, reduced "p/q" scalars.
std::string emit_report(const SuiteReport& r, ReportFormat format);
std::string emit_reports(const std::vector<SuiteReport>& rs, ReportFormat format);

}  // namespace gerstlab
