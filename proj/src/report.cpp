#include "sln/report.hpp"

#include <json.hpp>

#include <sstream>

namespace sln {

std::string VerificationReport::to_json(bool stable) const {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = {
        {"m", m},
        {"n", n},
        {"degree", degree},
        {"seed", seed},
        {"suites", requested_suites},
    };
    j["overall_pass"] = overall_pass();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : suites) {
        nlohmann::ordered_json js;
        js["name"] = s.name;
        js["attempted"] = s.attempted;
        js["passed"] = s.passed;
        js["pass"] = s.ok();
        js["first_failure"] = s.first_failure;
        js["wall_ms"] = stable ? 0.0 : s.wall_ms;
        js["notes"] = s.notes;
        arr.push_back(std::move(js));
    }
    j["suites"] = std::move(arr);
    auto conv = nlohmann::ordered_json::array();
    for (const auto& c : conventions)
        conv.push_back({{"name", c.name}, {"value", c.value}});
    j["conventions"] = std::move(conv);
    return j.dump(2) + "\n";
}

std::string VerificationReport::to_markdown() const {
    std::ostringstream out;
    out << "# Verification report\n\n";
    out << "- shape: (" << m << "|" << n << ")\n";
    out << "- truncation degree: " << degree << "\n";
    out << "- seed: " << seed << "\n";
    out << "- overall: " << (overall_pass() ? "PASS" : "FAIL") << "\n\n";
    out << "| suite | attempted | passed | status | wall (ms) |\n";
    out << "|---|---:|---:|---|---:|\n";
    for (const auto& s : suites) {
        out << "| " << s.name << " | " << s.attempted << " | " << s.passed
            << " | " << (s.ok() ? "pass" : "FAIL") << " | " << s.wall_ms
            << " |\n";
    }
    out << "\n";
    for (const auto& s : suites) {
        if (!s.first_failure.empty())
            out << "- first failure in `" << s.name << "`: " << s.first_failure
                << "\n";
        for (const auto& note : s.notes)
            out << "- note (" << s.name << "): " << note << "\n";
    }
    if (!conventions.empty()) {
        out << "\n## Conventions\n\n";
        for (const auto& c : conventions)
            out << "- " << c.name << ": " << c.value << "\n";
    }
    return out.str();
}

} // namespace sln
