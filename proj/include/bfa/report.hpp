#pragma once

#include <string>
#include <vector>

#include "bfa/classify.hpp"
#include "bfa/harness.hpp"
#include "bfa/influence.hpp"

namespace bfa {

// Full analysis record: ClassReport + spectrum + influence + entropy,
// schema-versioned. Shapes documented in the README.
std::string analysis_json(const TruthTable& tt, bool include_spectrum = true);
std::string class_report_json(const TruthTable& tt);

std::string csv_header();
std::string csv_line(const ExperimentRow& row);
std::string rows_to_csv(const std::vector<ExperimentRow>& rows);

// one human-readable line per row, for terminal output
std::string row_summary(const ExperimentRow& row);

std::string census_summary(const CensusResult& result);

}  // namespace bfa
