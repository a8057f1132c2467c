#pragma once

#include <string>
#include <vector>

namespace modcat {

/// One verification check: an identity family or a single instance of one.
struct Check {
    std::string id;
    std::string instance;
    bool pass = false;
    std::string detail;
};

/// Deterministic check report: insertion order is preserved and callers only
/// append in sorted loops, so identical inputs yield byte-identical output.
class Report {
public:
    void add_pass(std::string id, std::string instance, std::string detail = "");
    void add_fail(std::string id, std::string instance, std::string detail = "");
    void merge(Report other);

    const std::vector<Check>& checks() const { return checks_; }
    bool all_pass() const;
    long failures() const;

    /// One "PASS/FAIL <check-id> <instance>" line per check plus a summary line.
    std::string to_text() const;
    /// {"checks": [{"id", "instance", "pass"}...], "summary": {...}}
    std::string to_json_text() const;

private:
    std::vector<Check> checks_;
};

} // namespace modcat
