#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace k2ff {

/// One experiment run. Exact values are kept as integer/rational strings;
/// the decimal fields are rendered from them at output time only.
struct ExperimentReport {
    std::string experiment_id;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::pair<std::string, std::string>> exact_values;
    double empirical = 0.0;
    double predicted = 0.0;
    double ratio = 0.0;
    bool pass = false;
    std::int64_t runtime_ms = 0;
};

std::string render_json(const std::vector<ExperimentReport>& reports, int decimal_digits);
std::string render_csv(const std::vector<ExperimentReport>& reports, int decimal_digits);
std::string render_text(const std::vector<ExperimentReport>& reports, int decimal_digits);

bool all_pass(const std::vector<ExperimentReport>& reports);

} // namespace k2ff
