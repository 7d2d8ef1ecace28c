#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpi/diagrams.hpp"
#include "qpi/pidegree.hpp"

namespace qpi {

using json = nlohmann::json;

// Exact PI-degree integers are printed only up to this many decimal digits.
// Read from QPIDEG_DIGIT_BUDGET; default 64.
std::size_t digit_budget();

json pi_degree_to_json(const PiDegree& d, std::size_t budget);
PiDegree pi_degree_from_json(const json& j);

struct ExtendedReport {
    std::vector<std::string> invariant_factors;
    std::size_t kernel_dim = 0;
    int kernel_delta = 0;
    std::string h_next;
    std::vector<PiDegree> pi_degrees;
    bool operator==(const ExtendedReport&) const = default;
};

struct DiagramReport {
    std::string input;
    int m = 0;
    int n = 0;
    int N = 0;
    bool cauchon_le = true;
    std::string tau;
    std::vector<int> tau_one_line;
    int r = 0;
    std::vector<std::string> invariant_factors;
    std::size_t kernel_dim = 0;
    bool one_perp = true;
    std::vector<PiDegree> pi_degrees;
    std::optional<ExtendedReport> extended;
    std::vector<std::vector<int>> cycles;
    std::vector<std::vector<std::string>> kernel;

    bool operator==(const DiagramReport&) const = default;
};

struct ReportOptions {
    std::vector<std::uint64_t> ells;
    bool extended = false;
    bool cycles = false;
    bool kernel = false;
};

DiagramReport build_diagram_report(const Diagram& d, const std::string& input, const ReportOptions& opts);

json report_to_json(const DiagramReport& r, std::size_t budget);
DiagramReport report_from_json(const json& j);

std::string format_pi_degree(const PiDegree& d, std::size_t budget);
std::string format_report(const DiagramReport& r, std::size_t budget);

std::vector<std::string> int_strings(const std::vector<Int>& v);

} // namespace qpi
