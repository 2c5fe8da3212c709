#pragma once

#include <string>
#include <vector>

namespace mhilb::corpus {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> checks;  // one line per sub-check, prefixed "ok" or "FAIL"
    double seconds = 0;
    double limit_seconds = 0;
};

std::vector<int> criterion_ids();
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

// "PASS [3] title (1.23 s / limit 60 s)"
std::string summary_line(const CriterionResult& r);

std::string corpus_dir();

}  // namespace mhilb::corpus
