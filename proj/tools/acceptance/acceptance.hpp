#ifndef DEQUANT_ACCEPTANCE_HPP
#define DEQUANT_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace dequant::acceptance {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;
    double limit_seconds = 0;  // target runtime; exceeding it fails the criterion
    std::string error;         // exception text, if one escaped

    bool pass() const;
    // "PASS  1 title (0.010 s, limit 1 s)"; without timing the line is
    // reproducible byte for byte.
    std::string line(bool timing = true) const;
    std::string details() const;
};

std::vector<int> criterion_ids();
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

}  // namespace dequant::acceptance

#endif
