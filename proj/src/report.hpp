#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mouldcalc {

// Conventions in force across the whole library, echoed into every report.
std::vector<std::pair<std::string, std::string>> active_conventions();

struct CheckResult {
    std::string label;
    bool passed = false;
    std::string detail; // counterexample payload on failure, empty otherwise
};

// Structured pass/fail record for one named verification suite.
class VerificationReport {
  public:
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    const std::string &suite() const { return suite_; }
    void set_bound(const std::string &key, const std::string &value);
    void check(const std::string &label, bool passed, const std::string &detail = "");
    void merge(const VerificationReport &other); // absorb checks, prefixed by suite

    bool ok() const;
    size_t size() const { return checks_.size(); }
    const std::vector<CheckResult> &checks() const { return checks_; }
    const std::vector<std::pair<std::string, std::string>> &bounds() const { return bounds_; }

    std::string text() const; // human-readable, deterministic
    std::string json() const; // machine-readable variant of the same record

  private:
    std::string suite_;
    std::vector<std::pair<std::string, std::string>> bounds_;
    std::vector<CheckResult> checks_;
};

} // namespace mouldcalc
