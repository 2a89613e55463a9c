#pragma once

// Line-delimited JSON report records.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace topoarith {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, inconclusive };

std::string_view to_string(Status s);

struct ReportRecord {
    std::string suite;
    std::string case_name;
    Json params = Json::object();
    Status status = Status::pass;
    std::optional<std::string> counterexample;
    std::optional<Json> evidence;
    double duration_ms = 0;
};

/// Keys in fixed order: suite, case, params, status, counterexample,
/// evidence (when present), duration_ms (only with timing).
std::string to_json_line(const ReportRecord& r, bool timing = false);
ReportRecord parse_json_line(const std::string& line);

/// Canonical order: suite, case, then serialized params.
void sort_records(std::vector<ReportRecord>& records);

void write_records(std::ostream& os, const std::vector<ReportRecord>& records, bool timing = false);

bool any_failed(const std::vector<ReportRecord>& records);

}  // namespace topoarith
