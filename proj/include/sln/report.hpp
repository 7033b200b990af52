#ifndef SLN_REPORT_HPP
#define SLN_REPORT_HPP

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace sln {

/// Aggregated result of one identity suite.  Only the first failing witness
/// is kept; counting continues so the report shows the full damage.
struct SuiteResult {
    std::string name;
    long attempted = 0;
    long passed = 0;
    std::string first_failure; // rendered witness, empty when clean
    double wall_ms = 0.0;
    std::vector<std::string> notes;

    bool ok() const { return attempted == passed; }

    void check(bool good, const std::function<std::string()>& witness) {
        ++attempted;
        if (good) {
            ++passed;
        } else if (first_failure.empty()) {
            first_failure = witness();
        }
    }
    void check(bool good, const std::string& witness) {
        check(good, [&] { return witness; });
    }
    void note(std::string text) { notes.push_back(std::move(text)); }
};

/// Timer helper: constructs, measures, writes wall_ms on destruction.
class SuiteTimer {
public:
    explicit SuiteTimer(SuiteResult& r)
        : result_(r), start_(std::chrono::steady_clock::now()) {}
    ~SuiteTimer() {
        auto end = std::chrono::steady_clock::now();
        result_.wall_ms =
            std::chrono::duration<double, std::milli>(end - start_).count();
    }

private:
    SuiteResult& result_;
    std::chrono::steady_clock::time_point start_;
};

/// Convention resolved empirically at run time (tensor-star Koszul choice,
/// phi sign resolution, nabla commutator signs, ...).
struct ConventionRecord {
    std::string name;
    std::string value;
};

struct VerificationReport {
    static constexpr int kSchemaVersion = 1;

    // config echo
    int m = 0;
    int n = 0;
    int degree = 0;
    unsigned long long seed = 0;
    std::vector<std::string> requested_suites;

    std::vector<SuiteResult> suites;
    std::vector<ConventionRecord> conventions;

    bool overall_pass() const {
        for (const auto& s : suites)
            if (!s.ok()) return false;
        return true;
    }

    void add_convention(const std::string& name, const std::string& value) {
        for (auto& c : conventions)
            if (c.name == name) { c.value = value; return; }
        conventions.push_back({name, value});
    }

    /// stable = true zeroes wall-clock fields so identical configs produce
    /// byte-identical output.
    std::string to_json(bool stable = false) const;
    std::string to_markdown() const;
};

} // namespace sln

#endif
