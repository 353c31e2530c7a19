#pragma once

// Manifest-driven verification suites: each suite recomputes one batch of
// expected values from the checked-in manifest and reports computed vs
// expected per check. A discrepancy-allowed row that differs is reported
// as a discrepancy, not a failure.

#include <string>
#include <vector>

#include <json.hpp>

namespace coxeter {

enum class CheckStatus { pass, fail, discrepancy };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string computed;
    std::string expected;
    std::string note;
};

std::vector<CheckResult> verify_table2(const nlohmann::json& manifest);
std::vector<CheckResult> verify_table3(const nlohmann::json& manifest);
std::vector<CheckResult> verify_table5(const nlohmann::json& manifest);
std::vector<CheckResult> verify_lemma_kn(const nlohmann::json& manifest);
std::vector<CheckResult> verify_finite_oracle(const nlohmann::json& manifest);
std::vector<CheckResult> verify_embedding(const nlohmann::json& manifest);
std::vector<CheckResult> verify_fig1(const nlohmann::json& manifest);
std::vector<CheckResult> verify_infinite_pairs(const nlohmann::json& manifest);
std::vector<CheckResult> verify_divisibility(const nlohmann::json& manifest);
std::vector<CheckResult> verify_admissible(const nlohmann::json& manifest);

std::string status_str(CheckStatus s);

// True when no check failed; discrepancies count as passing.
bool all_passed(const std::vector<CheckResult>& results);

} // namespace coxeter
