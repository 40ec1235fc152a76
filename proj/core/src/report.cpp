#include "naqm/report.hpp"

#include <json.hpp>

namespace naqm::verification {

namespace {

constexpr std::size_t kMaxFailureLines = 10;
constexpr std::size_t kMaxWitnessLines = 5;

}  // namespace

std::string to_text(const VerificationReport& report) {
    const std::size_t passed_cases = report.total_cases - report.failures.size();
    std::string out = report.suite;
    out += ": " + std::to_string(passed_cases) + "/" + std::to_string(report.total_cases) +
           " passed";
    if (!report.failures.empty())
        out += " (" + std::to_string(report.failures.size()) + " failed)";
    out += "\n";
    std::size_t shown = 0;
    for (const CaseOutcome& f : report.failures) {
        if (shown++ == kMaxFailureLines) {
            out += "  ... (" + std::to_string(report.failures.size() - kMaxFailureLines) +
                   " more failures)\n";
            break;
        }
        out += "  FAIL " + f.case_descriptor + ": expected " + f.expected + "; actual " +
               f.actual + "\n";
    }
    shown = 0;
    for (const CaseOutcome& w : report.witnesses) {
        if (shown++ == kMaxWitnessLines) {
            out += "  ... (" + std::to_string(report.witnesses.size() - kMaxWitnessLines) +
                   " more witnesses)\n";
            break;
        }
        out += "  witness " + w.case_descriptor + ": " + w.expected + "; " + w.actual + "\n";
    }
    return out;
}

std::string to_json_string(std::span<const VerificationReport> reports) {
    nlohmann::json array = nlohmann::json::array();
    for (const VerificationReport& report : reports) {
        nlohmann::json failures = nlohmann::json::array();
        for (const CaseOutcome& f : report.failures) {
            failures.push_back({{"case", f.case_descriptor},
                                {"expected", f.expected},
                                {"actual", f.actual}});
        }
        nlohmann::json witnesses = nlohmann::json::array();
        for (const CaseOutcome& w : report.witnesses) {
            witnesses.push_back({{"case", w.case_descriptor},
                                 {"expected", w.expected},
                                 {"actual", w.actual}});
        }
        array.push_back({{"suite", report.suite},
                         {"total", report.total_cases},
                         {"failed", report.failures.size()},
                         {"passed", report.passed},
                         {"failures", std::move(failures)},
                         {"witnesses", std::move(witnesses)}});
    }
    return array.dump(2);
}

}  // namespace naqm::verification
