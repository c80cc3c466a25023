#ifndef QCONG_VERDICT_HPP
#define QCONG_VERDICT_HPP

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcong/int.hpp"

namespace qcong {

enum class Status {
    proved,                // theorem, lemma or classical identity
    conjecture_empirical,  // checked instance of an open or externally proved conjecture
};

std::string_view status_name(Status s);

/// Outcome of one verification. A failing verdict always carries a
/// nonempty witness (a serialized remainder or obstruction).
struct Verdict {
    std::string statement;
    /// Parameter names and values in declaration order.
    std::vector<std::pair<std::string, Exp>> params;
    bool pass = false;
    std::optional<std::string> witness;
    std::chrono::nanoseconds elapsed{0};
    Status status = Status::proved;

    std::optional<Exp> param(std::string_view name) const {
        for (const auto& [k, v] : params)
            if (k == name) return v;
        return std::nullopt;
    }
};

/// Stopwatch for filling Verdict::elapsed.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::chrono::nanoseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace qcong

#endif  // QCONG_VERDICT_HPP
