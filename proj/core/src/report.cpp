#include "modcat/report.hpp"

#include <sstream>
#include <utility>

#include <json.hpp>

namespace modcat {

void Report::add_pass(std::string id, std::string instance, std::string detail) {
    checks_.push_back({std::move(id), std::move(instance), true, std::move(detail)});
}

void Report::add_fail(std::string id, std::string instance, std::string detail) {
    checks_.push_back({std::move(id), std::move(instance), false, std::move(detail)});
}

void Report::merge(Report other) {
    for (auto& c : other.checks_) checks_.push_back(std::move(c));
}

bool Report::all_pass() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

long Report::failures() const {
    long n = 0;
    for (const auto& c : checks_)
        if (!c.pass) ++n;
    return n;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks_) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id << ' ' << c.instance;
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << '\n';
    }
    os << "summary: " << checks_.size() << " checks, " << failures() << " failed\n";
    return os.str();
}

std::string Report::to_json_text() const {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["instance"] = c.instance;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["checks"].push_back(std::move(e));
    }
    j["summary"] = {{"total", checks_.size()},
                    {"passed", checks_.size() - failures()},
                    {"failed", failures()}};
    return j.dump(2) + "\n";
}

} // namespace modcat
