#include "topoarith/report.hpp"

#include <algorithm>
#include <tuple>

#include "topoarith/errors.hpp"

namespace topoarith {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_json_line(const ReportRecord& r, bool timing) {
    Json j;
    j["suite"] = r.suite;
    j["case"] = r.case_name;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
    if (r.evidence) j["evidence"] = *r.evidence;
    if (timing) j["duration_ms"] = r.duration_ms;
    return j.dump();
}

ReportRecord parse_json_line(const std::string& line) {
    Json j;
    try {
        j = Json::parse(line);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad report line: ") + e.what());
    }
    ReportRecord r;
    r.suite = j.at("suite").get<std::string>();
    r.case_name = j.at("case").get<std::string>();
    r.params = j.at("params");
    const std::string status = j.at("status").get<std::string>();
    if (status == "pass")
        r.status = Status::pass;
    else if (status == "fail")
        r.status = Status::fail;
    else if (status == "inconclusive")
        r.status = Status::inconclusive;
    else
        throw ParseError("bad status: " + status);
    if (!j.at("counterexample").is_null()) r.counterexample = j.at("counterexample").get<std::string>();
    if (j.contains("evidence")) r.evidence = j.at("evidence");
    if (j.contains("duration_ms")) r.duration_ms = j.at("duration_ms").get<double>();
    return r;
}

void sort_records(std::vector<ReportRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const ReportRecord& a, const ReportRecord& b) {
        return std::forward_as_tuple(a.suite, a.case_name, a.params.dump()) <
               std::forward_as_tuple(b.suite, b.case_name, b.params.dump());
    });
}

void write_records(std::ostream& os, const std::vector<ReportRecord>& records, bool timing) {
    for (const auto& r : records) os << to_json_line(r, timing) << '\n';
}

bool any_failed(const std::vector<ReportRecord>& records) {
    return std::any_of(records.begin(), records.end(), [](const ReportRecord& r) { return r.status == Status::fail; });
}

}  // namespace topoarith
