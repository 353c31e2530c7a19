// Acceptance gate: runs one numbered verification suite against the
// checked-in manifest, enforces that suite's runtime budget, and prints one
// [PASS]/[FAIL] line per check plus a final verdict line.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "coxeter/verify.hpp"

using namespace coxeter;

namespace {

struct Criterion {
    const char* title;
    double budget_seconds; // 0 disables the internal budget
    std::vector<CheckResult> (*run)(const nlohmann::json&);
};

const Criterion kCriteria[] = {
    {"self-similar rows (indices 2, 3, 4)", 1.0, verify_table2},
    {"indecomposable maximal word rows", 30.0, verify_table3},
    {"order ratios and extension indices", 60.0, verify_table5},
    {"homothety indices k^n", 30.0, verify_lemma_kn},
    {"finite enumeration vs brute-force oracle", 300.0, verify_finite_oracle},
    {"embedding criterion vs enumeration inventory", 120.0, verify_embedding},
    {"index-8 commensurability classes", 10.0, verify_fig1},
    {"infinite-index maximal pairs", 10.0, verify_infinite_pairs},
    {"index divisibility over all records", 0.0, verify_divisibility},
    {"admissible chains", 30.0, verify_admissible},
};

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <criterion 1..10> <manifest.json>\n";
        return 2;
    }
    int num = std::atoi(argv[1]);
    if (num < 1 || num > 10) {
        std::cerr << "criterion number must be 1..10\n";
        return 2;
    }
    std::ifstream in(argv[2]);
    if (!in) {
        std::cerr << "cannot open manifest '" << argv[2] << "'\n";
        return 2;
    }
    nlohmann::json manifest = nlohmann::json::parse(in);

    const Criterion& c = kCriteria[num - 1];
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    try {
        results = c.run(manifest);
    } catch (const std::exception& e) {
        std::cout << "[FAIL] criterion " << num << " (" << c.title
                  << "): exception: " << e.what() << "\n";
        return 1;
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    size_t failed = 0;
    for (const auto& r : results) {
        std::cout << "[" << status_str(r.status) << "] " << r.name << " (computed "
                  << r.computed << ", expected " << r.expected << ")";
        if (!r.note.empty()) std::cout << " note: " << r.note;
        std::cout << "\n";
        if (r.status == CheckStatus::fail) ++failed;
    }

    bool in_budget = c.budget_seconds == 0.0 || elapsed <= c.budget_seconds;
    if (!in_budget)
        std::cout << "[FAIL] criterion " << num << " runtime " << elapsed << "s exceeds "
                  << c.budget_seconds << "s budget\n";

    bool ok = failed == 0 && in_budget;
    std::cout << "[" << (ok ? "PASS" : "FAIL") << "] criterion " << num << " (" << c.title
              << "): " << results.size() << " checks, " << failed << " failed, "
              << elapsed << "s\n";
    return ok ? 0 : 1;
}
