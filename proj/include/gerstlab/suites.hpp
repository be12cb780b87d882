#pragma once
#include <gerstlab/report.hpp>

#include <string>
#include <vector>

namespace gerstlab {

// The verification suites behind `verify` and the acceptance run. All checks
// are exact; random sampling uses fixed seeds for reproducibility.
SuiteReport suite_hochschild();
SuiteReport suite_cohomology();
SuiteReport suite_gerstenhaber_cohomology();
SuiteReport suite_chains();
SuiteReport suite_polyvector();
SuiteReport suite_hkr();
SuiteReport suite_ginfty();
SuiteReport suite_bvinfty();
SuiteReport suite_defcomplex();
SuiteReport suite_cobar();
SuiteReport suite_grading_split();

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name);
std::vector<SuiteReport> run_all_suites();

}  // namespace gerstlab
