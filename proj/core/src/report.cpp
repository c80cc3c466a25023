#include "qcong/report.hpp"

#include <chrono>

namespace qcong {

std::string_view status_name(Status s) {
    return s == Status::proved ? "proved" : "conjecture-empirical";
}

namespace {

long long elapsed_ms(const Verdict& v, const ReportOptions& opts) {
    if (!opts.include_timing) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(v.elapsed).count();
}

void check_stream(const std::ostream& out) {
    if (!out) throw ReportIoError("failed to write report");
}

}  // namespace

nlohmann::ordered_json to_json(const Verdict& v, const ReportOptions& opts) {
    nlohmann::ordered_json j;
    j["statement"] = v.statement;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : v.params) params[name] = value;
    j["params"] = std::move(params);
    j["pass"] = v.pass;
    j["witness"] = v.witness ? nlohmann::ordered_json(*v.witness) : nlohmann::ordered_json(nullptr);
    j["elapsed_ms"] = elapsed_ms(v, opts);
    j["status"] = std::string(status_name(v.status));
    return j;
}

ReportSummary summarize(const std::vector<Verdict>& verdicts) {
    ReportSummary s;
    s.total = verdicts.size();
    for (const auto& v : verdicts) (v.pass ? s.passed : s.failed) += 1;
    return s;
}

void emit_jsonl(const std::vector<Verdict>& verdicts, std::ostream& out, const ReportOptions& opts) {
    check_stream(out);
    for (const auto& v : verdicts) {
        out << to_json(v, opts).dump() << '\n';
        check_stream(out);
    }
    const ReportSummary s = summarize(verdicts);
    nlohmann::ordered_json summary;
    summary["summary"]["total"] = s.total;
    summary["summary"]["passed"] = s.passed;
    summary["summary"]["failed"] = s.failed;
    out << summary.dump() << '\n';
    out.flush();
    check_stream(out);
}

void emit_text(const std::vector<Verdict>& verdicts, std::ostream& out, const ReportOptions& opts) {
    check_stream(out);
    for (const auto& v : verdicts) {
        out << (v.pass ? "PASS " : "FAIL ") << v.statement;
        for (const auto& [name, value] : v.params) out << ' ' << name << '=' << value;
        if (v.status == Status::conjecture_empirical) out << " [empirical]";
        if (opts.include_timing) out << " (" << elapsed_ms(v, opts) << " ms)";
        if (v.witness) out << "\n    witness: " << *v.witness;
        out << '\n';
        check_stream(out);
    }
    const ReportSummary s = summarize(verdicts);
    out << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed << '\n';
    out.flush();
    check_stream(out);
}

}  // namespace qcong
