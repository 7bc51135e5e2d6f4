#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace mouldcalc {

std::vector<std::pair<std::string, std::string>> active_conventions()
{
    return {
        {"bernoulli", "B1 = +1/2"},
        {"mu", "mu(A,B)(w) = sum_{w=ab} A(a)B(b)"},
        {"odot", "f (.) g = f*g - D_g(f)"},
    };
}

void VerificationReport::set_bound(const std::string &key, const std::string &value)
{
    bounds_.emplace_back(key, value);
}

void VerificationReport::check(const std::string &label, bool passed, const std::string &detail)
{
    checks_.push_back({label, passed, detail});
}

void VerificationReport::merge(const VerificationReport &other)
{
    for (const auto &c : other.checks_)
        checks_.push_back({other.suite_ + ": " + c.label, c.passed, c.detail});
}

bool VerificationReport::ok() const
{
    for (const auto &c : checks_)
        if (!c.passed)
            return false;
    return true;
}

std::string VerificationReport::text() const
{
    std::ostringstream os;
    os << "suite " << suite_ << "\n";
    for (const auto &[k, v] : active_conventions())
        os << "convention " << k << ": " << v << "\n";
    for (const auto &[k, v] : bounds_)
        os << "bound " << k << " = " << v << "\n";
    for (const auto &c : checks_) {
        os << (c.passed ? "pass " : "FAIL ") << c.label << "\n";
        if (!c.passed && !c.detail.empty())
            os << "     " << c.detail << "\n";
    }
    os << "result " << (ok() ? "PASS" : "FAIL") << " (" << checks_.size() << " checks)\n";
    return os.str();
}

static void json_escape(std::ostringstream &os, const std::string &s)
{
    os << '"';
    for (char c : s) {
        switch (c) {
        case '"': os << "\\\""; break;
        case '\\': os << "\\\\"; break;
        case '\n': os << "\\n"; break;
        case '\t': os << "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                os << buf;
            } else {
                os << c;
            }
        }
    }
    os << '"';
}

std::string VerificationReport::json() const
{
    std::ostringstream os;
    os << "{\"suite\":";
    json_escape(os, suite_);
    os << ",\"conventions\":{";
    bool first = true;
    for (const auto &[k, v] : active_conventions()) {
        if (!first)
            os << ",";
        json_escape(os, k);
        os << ":";
        json_escape(os, v);
        first = false;
    }
    os << "},\"bounds\":{";
    first = true;
    for (const auto &[k, v] : bounds_) {
        if (!first)
            os << ",";
        json_escape(os, k);
        os << ":";
        json_escape(os, v);
        first = false;
    }
    os << "},\"checks\":[";
    first = true;
    for (const auto &c : checks_) {
        if (!first)
            os << ",";
        os << "{\"label\":";
        json_escape(os, c.label);
        os << ",\"passed\":" << (c.passed ? "true" : "false");
        if (!c.detail.empty()) {
            os << ",\"detail\":";
            json_escape(os, c.detail);
        }
        os << "}";
        first = false;
    }
    os << "],\"result\":" << (ok() ? "\"PASS\"" : "\"FAIL\"") << "}";
    return os.str();
}

} // namespace mouldcalc
