#ifndef UNITROOT_REPORT_HPP
#define UNITROOT_REPORT_HPP

#include <string>
#include <vector>

namespace unitroot {

// Outcome of one verified congruence or containment. Failures are data,
// not exceptions: a verifier runs everything it was asked to and reports.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

} // namespace unitroot

#endif
