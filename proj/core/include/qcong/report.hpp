#ifndef QCONG_REPORT_HPP
#define QCONG_REPORT_HPP

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcong/verdict.hpp"

namespace qcong {

struct ReportOptions {
    /// Emit measured elapsed_ms; when false the field is 0 so that reports
    /// are byte-identical across runs and worker counts.
    bool include_timing = false;
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

class ReportIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"statement", "params", "pass", "witness", "elapsed_ms", "status"} in that order.
nlohmann::ordered_json to_json(const Verdict& v, const ReportOptions& opts = {});

ReportSummary summarize(const std::vector<Verdict>& verdicts);

/// One JSON object per line, then {"summary": {...}}. Throws ReportIoError
/// if the stream goes bad.
void emit_jsonl(const std::vector<Verdict>& verdicts, std::ostream& out, const ReportOptions& opts = {});

/// Human-readable variant: "PASS statement n=2 alpha=1 ..." lines and a total.
void emit_text(const std::vector<Verdict>& verdicts, std::ostream& out, const ReportOptions& opts = {});

}  // namespace qcong

#endif  // QCONG_REPORT_HPP
