#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ccn/partition.hpp"

namespace ccn {

// Exact CC(G) value, the rule that produced it, and (whenever the value
// is at least 1) a re-checkable certificate with exactly `value` cells.
struct CCResult {
    int value = 0;
    std::string method;
    std::optional<CoalitionCertificate> certificate;
};

inline nlohmann::ordered_json cc_result_to_json(const CCResult& r) {
    nlohmann::ordered_json j;
    j["value"] = r.value;
    j["method"] = r.method;
    if (r.certificate)
        j["certificate"] = certificate_to_json(*r.certificate);
    else
        j["certificate"] = nullptr;
    return j;
}

// Outcome of a guarded formula: the branch that matched and, when the
// formula decides the value, the value itself.
struct FormulaReport {
    bool applicable = false;
    std::optional<int> value;
    std::string case_label;
    std::vector<std::pair<std::string, long long>> inputs;  // derived quantities used by the branch

    static FormulaReport decided(int v, std::string label,
                                 std::vector<std::pair<std::string, long long>> in = {}) {
        return {true, v, std::move(label), std::move(in)};
    }
    static FormulaReport not_applicable(std::string label,
                                        std::vector<std::pair<std::string, long long>> in = {}) {
        return {false, std::nullopt, std::move(label), std::move(in)};
    }
};

inline nlohmann::ordered_json formula_report_to_json(const FormulaReport& r) {
    nlohmann::ordered_json j;
    j["applicable"] = r.applicable;
    if (r.value)
        j["value"] = *r.value;
    else
        j["value"] = nullptr;
    j["case"] = r.case_label;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [key, val] : r.inputs) inputs[key] = val;
    j["inputs"] = inputs;
    return j;
}

}  // namespace ccn
