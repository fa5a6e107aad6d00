#include "k2ff/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace k2ff {

namespace {

std::string fmt_double(double v, int digits) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

std::string join_params(const ExperimentReport& r) {
    std::string out;
    for (const auto& [k, v] : r.parameters) {
        if (!out.empty()) out += ';';
        out += k + "=" + v;
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string render_json(const std::vector<ExperimentReport>& reports, int decimal_digits) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [k, v] : r.parameters) params[k] = v;
        nlohmann::json exact = nlohmann::json::object();
        for (const auto& [k, v] : r.exact_values) exact[k] = v;
        arr.push_back({{"experiment_id", r.experiment_id},
                       {"parameters", params},
                       {"exact_values", exact},
                       {"comparison",
                        {{"empirical", fmt_double(r.empirical, decimal_digits)},
                         {"predicted", fmt_double(r.predicted, decimal_digits)},
                         {"ratio", fmt_double(r.ratio, decimal_digits)}}},
                       {"pass", r.pass},
                       {"runtime_ms", r.runtime_ms}});
    }
    return arr.dump(2) + "\n";
}

std::string render_csv(const std::vector<ExperimentReport>& reports, int decimal_digits) {
    // Union of exact-value names, in first-seen order.
    std::vector<std::string> names;
    for (const auto& r : reports)
        for (const auto& [k, v] : r.exact_values)
            if (std::find(names.begin(), names.end(), k) == names.end()) names.push_back(k);

    std::ostringstream os;
    os << "experiment_id,params";
    for (const auto& n : names) os << ',' << csv_escape(n);
    os << ",empirical,predicted,ratio,pass,runtime_ms\n";
    for (const auto& r : reports) {
        os << csv_escape(r.experiment_id) << ',' << csv_escape(join_params(r));
        for (const auto& n : names) {
            auto it = std::find_if(r.exact_values.begin(), r.exact_values.end(),
                                   [&](const auto& kv) { return kv.first == n; });
            os << ',' << (it == r.exact_values.end() ? "" : csv_escape(it->second));
        }
        os << ',' << fmt_double(r.empirical, decimal_digits) << ','
           << fmt_double(r.predicted, decimal_digits) << ','
           << fmt_double(r.ratio, decimal_digits) << ',' << (r.pass ? "true" : "false")
           << ',' << r.runtime_ms << '\n';
    }
    return os.str();
}

std::string render_text(const std::vector<ExperimentReport>& reports, int decimal_digits) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "== " << r.experiment_id;
        if (!r.parameters.empty()) os << " [" << join_params(r) << "]";
        os << " ==\n";
        for (const auto& [k, v] : r.exact_values) os << "  " << k << " = " << v << '\n';
        os << "  empirical = " << fmt_double(r.empirical, decimal_digits) << '\n'
           << "  predicted = " << fmt_double(r.predicted, decimal_digits) << '\n'
           << "  ratio     = " << fmt_double(r.ratio, decimal_digits) << '\n'
           << "  pass      = " << (r.pass ? "yes" : "no") << '\n'
           << "  runtime   = " << r.runtime_ms << " ms\n";
    }
    return os.str();
}

bool all_pass(const std::vector<ExperimentReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return !reports.empty();
}

} // namespace k2ff
