#include "qcong/grid.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <variant>

#include "qcong/arith.hpp"
#include "qcong/congruence.hpp"
#include "qcong/q_objects.hpp"
#include "qcong/sun_poly.hpp"

namespace qcong {

namespace {

class CellArgs {
public:
    explicit CellArgs(const GridCell& cell) : cell_(cell) {}
    Exp operator[](std::string_view name) const {
        for (const auto& [k, v] : cell_)
            if (k == name) return v;
        throw std::logic_error("grid cell lacks parameter " + std::string(name));
    }

private:
    const GridCell& cell_;
};

using Evaluator = std::function<std::vector<Verdict>(const GridCell&, bool fault)>;
using DomainFilter = std::function<bool(const CellArgs&)>;

struct Entry {
    StatementInfo info;
    Evaluator evaluate;
    DomainFilter in_domain;
};

Verdict label(Verdict v, const StatementInfo& info, const GridCell& cell) {
    v.statement = info.id;
    v.params = cell;
    v.status = info.status;
    return v;
}

template <class SumFn, class CheckFn>
Evaluator q_theorem(const StatementInfo& info, SumFn sum_fn, CheckFn check_fn) {
    return [info, sum_fn, check_fn](const GridCell& cell, bool fault) {
        const CellArgs p(cell);
        QLaurent sum = sum_fn(p);
        if (fault) sum += QLaurent(1);
        return std::vector<Verdict>{label(check_fn(sum, p["n"]), info, cell)};
    };
}

Verdict integrality(const XPoly& numerator, const Int& den) {
    Verdict v;
    auto res = divexact(numerator, den);
    v.pass = std::holds_alternative<XPoly>(res);
    if (!v.pass) v.witness = "not divisible by " + den.get_str() + ": " + std::get<1>(res).describe();
    return v;
}

Int triple(Exp n) { return to_int(n) * (n + 1) * (n + 2); }

Evaluator int_plain(const StatementInfo& info, Sign sign) {
    return [info, sign](const GridCell& cell, bool fault) {
        const CellArgs p(cell);
        if (!fault) return std::vector<Verdict>{label(int_sum_plain(p["n"], p["alpha"], p["m"], p["r"], sign), info, cell)};
        const Exp n = p["n"];
        XPoly numerator = int_sum_plain_numerator(n, p["alpha"], p["m"], p["r"], sign) * Int(n % 2 == 0 ? 2 : 1);
        numerator += XPoly(1);
        return std::vector<Verdict>{label(integrality(numerator, triple(n)), info, cell)};
    };
}

Evaluator no_fault(const StatementInfo& info, std::function<std::vector<Verdict>(const CellArgs&)> fn) {
    return [info, fn](const GridCell& cell, bool fault) {
        if (fault) throw std::invalid_argument("fault injection is not supported for " + info.id);
        std::vector<Verdict> out = fn(CellArgs(cell));
        for (auto& v : out) {
            if (v.params.empty()) v.params = cell;
            v.status = info.status;
        }
        return out;
    };
}

bool is_even_n(const CellArgs& p) { return p["n"] % 2 == 0; }
bool always(const CellArgs&) { return true; }

std::vector<Entry> build_registry() {
    const std::vector<ParamSchema> namr = {{"n", 2, std::nullopt}, {"alpha", 1, 1}, {"m", 1, 1}, {"r", 1, 1}};
    const std::vector<ParamSchema> nabmr = {
        {"n", 2, std::nullopt}, {"alpha", 1, 1}, {"beta", 1, 1}, {"m", 1, 1}, {"r", 1, 1}};
    std::vector<ParamSchema> int_namr = namr;
    int_namr[0].min = 1;
    std::vector<ParamSchema> int_nabmr = nabmr;
    int_nabmr[0].min = 1;

    std::vector<Entry> reg;
    auto add = [&reg](StatementInfo info, auto make_eval, DomainFilter filter) {
        Evaluator ev = make_eval(info);
        reg.push_back({std::move(info), std::move(ev), std::move(filter)});
    };

    add({"thm-qsum-plain", "[n] divides sum [k(k+1)]^r [2k+1] q^((n-1-k)(am+1)) w_k(x;q)^m", namr},
        [](const StatementInfo& i) {
            return q_theorem(i, [](const CellArgs& p) { return qsum_plain(p["n"], p["alpha"], p["m"], p["r"]); },
                             verify_divisible_by_qn);
        },
        always);
    add({"thm-qsum-alternating", "cyclotomic product divides the alternating q^2 sum", namr},
        [](const StatementInfo& i) {
            return q_theorem(
                i, [](const CellArgs& p) { return qsum_alternating(p["n"], p["alpha"], p["m"], p["r"]); },
                verify_cyclotomic_product);
        },
        always);
    add({"thm-qsum-product", "[n] divides sum [k(k+2)]^r [2(k+1)] q^(...) (w_k w_{k+1})^m", namr},
        [](const StatementInfo& i) {
            return q_theorem(i, [](const CellArgs& p) { return qsum_product(p["n"], p["alpha"], p["m"], p["r"]); },
                             verify_divisible_by_qn);
        },
        always);
    add({"thm-qsum-general", "[n] divides the beta-generalized product sum", nabmr},
        [](const StatementInfo& i) {
            return q_theorem(
                i,
                [](const CellArgs& p) { return qsum_general(p["n"], p["alpha"], p["beta"], p["m"], p["r"]); },
                verify_divisible_by_qn);
        },
        always);
    add({"thm-int-plain", "(2,n)/(n(n+1)(n+2)) sum k^r(k+1)^r(2k+1) w_k^(a)(x)^m is in Z[x]", int_namr},
        [](const StatementInfo& i) { return int_plain(i, Sign::plus); }, always);
    add({"thm-int-alternating", "alternating (-1)^k version of thm-int-plain", int_namr},
        [](const StatementInfo& i) { return int_plain(i, Sign::alternating); }, always);
    add({"thm-int-lcm", "2/lcm(n..n+2beta+1) times the rising-factorial product sum is in Z[x]", int_nabmr},
        [](const StatementInfo& i) -> Evaluator {
            return [i](const GridCell& cell, bool fault) {
                const CellArgs p(cell);
                const Exp n = p["n"], beta = p["beta"];
                if (!fault)
                    return std::vector<Verdict>{
                        label(int_sum_lcm(n, p["alpha"], beta, p["m"], p["r"]), i, cell)};
                XPoly numerator = int_sum_lcm_numerator(n, p["alpha"], beta, p["m"], p["r"]) * Int(2);
                numerator += XPoly(1);
                return std::vector<Verdict>{label(integrality(numerator, lcm_range(n, n + 2 * beta + 1)), i, cell)};
            };
        },
        always);
    add({"lemma-23", "w_{ad+b} and its reflections agree with B_{a,b,d} mod Phi_d(q)",
         {{"a", 0, 0}, {"b", 0, 1}, {"d", 3, std::nullopt}, {"alpha", 1, 1}}},
        [](const StatementInfo& i) {
            return no_fault(i, [](const CellArgs& p) {
                return lemma_congruence_check(p["a"], p["b"], p["d"], p["alpha"]);
            });
        },
        [](const CellArgs& p) {
            const Exp b = p["b"], d = p["d"];
            return (d > 2 && b >= 1 && b <= d - 2) || (d > 3 && b >= 0 && b <= d - 3);
        });
    add({"lemma-31", "Phi_d(q) | Phi_d(q^2) for odd d; Phi_d(q^2) = Phi_2d(q) for even d",
         {{"d", 2, std::nullopt}}},
        [](const StatementInfo& i) {
            return no_fault(i, [](const CellArgs& p) {
                const Exp d = p["d"];
                Stopwatch clock;
                Verdict v;
                v.pass = lemma31_check(d);
                if (!v.pass) {
                    const QLaurent sq(subst_q_squared(cyclotomic(d)));
                    v.witness = d % 2 != 0 ? rem_monic(sq, cyclotomic(d)).to_string()
                                           : (sq - QLaurent(cyclotomic(2 * d))).to_string();
                }
                v.elapsed = clock.elapsed();
                return std::vector<Verdict>{v};
            });
        },
        always);
    add({"lemma-qlucas", "qbinom(ad+b, sd+t) = C(a,s) qbinom(b,t) mod Phi_d(q)",
         {{"d", 2, std::nullopt}, {"a", 0, 0}, {"b", 0, 0}, {"s", 0, 0}, {"t", 0, 0}}},
        [](const StatementInfo& i) {
            return no_fault(i, [](const CellArgs& p) {
                const Exp d = p["d"], a = p["a"], b = p["b"], s = p["s"], t = p["t"];
                Stopwatch clock;
                Verdict v;
                v.pass = q_lucas_check(d, a, b, s, t);
                if (!v.pass) {
                    const QLaurent diff = q_binomial(a * d + b, s * d + t) - q_binomial(b, t) * binomial_general(to_int(a), s);
                    v.witness = rem_monic(diff, cyclotomic(d)).to_string();
                }
                v.elapsed = clock.elapsed();
                return std::vector<Verdict>{v};
            });
        },
        [](const CellArgs& p) { return p["b"] <= p["d"] - 1 && p["t"] <= p["d"] - 1; });
    add({"qint-factorization", "[n] = prod_{d|n, d>1} Phi_d(q)", {{"n", 2, std::nullopt}}},
        [](const StatementInfo& i) {
            return no_fault(i, [](const CellArgs& p) {
                Stopwatch clock;
                Verdict v;
                v.pass = qint_factorization_check(p["n"]);
                if (!v.pass) v.witness = "product of cyclotomic factors differs from [n]";
                v.elapsed = clock.elapsed();
                return std::vector<Verdict>{v};
            });
        },
        always);
    add({"conj-52-even", "1/(n(n+1)(n+2)) sum (-1)^k k(k+1)(2k+1) w_k^(a)(x)^m in Z[x], a > 1, even n",
         {{"n", 1, std::nullopt}, {"alpha", 2, 2}, {"m", 1, 1}}, Status::conjecture_empirical},
        [](const StatementInfo& i) {
            return no_fault(i, [](const CellArgs& p) {
                return std::vector<Verdict>{
                    conjecture_check(ConjectureVariant::c52_eq14_even_n, p["n"], p["alpha"], p["m"])};
            });
        },
        is_even_n);
    add({"conj-54-ii", "2(2,n)/(n(n+1)(n+2)(2x+1)^m) sum k(k+1)(k+2)(w_k w_{k+1})^m in Z[x]",
         {{"n", 1, std::nullopt}, {"m", 1, 1}}, Status::conjecture_empirical},
        [](const StatementInfo& i) {
            return no_fault(i, [](const CellArgs& p) {
                return std::vector<Verdict>{conjecture_check(ConjectureVariant::c54_ii, p["n"], 1, p["m"])};
            });
        },
        always);
    add({"conj-54-iii", "4/(n(n+1)(n+2)(2x+1)^3) sum k(k+1)(k+2) w_k w_{k+1} in Z[x], even n",
         {{"n", 1, std::nullopt}}, Status::conjecture_empirical},
        [](const StatementInfo& i) {
            return no_fault(i, [](const CellArgs& p) {
                return std::vector<Verdict>{conjecture_check(ConjectureVariant::c54_iii, p["n"], 1, 1)};
            });
        },
        is_even_n);
    add({"identity-suite", "alternating, Narayana-transform and parity identities for w(n,k)",
         {{"n", 1, std::nullopt}, {"m", 1, 1}, {"b", 0, 0}}},
        [](const StatementInfo& i) {
            return no_fault(i, [](const CellArgs& p) {
                const Exp n = p["n"], m = p["m"], b = p["b"];
                std::vector<Verdict> out;
                for (const auto& rep : w_identity_suite(n, m, b)) {
                    Verdict v;
                    v.statement = "identity-suite:" + std::string(identity_name(rep.id));
                    v.params = {{"n", n}, {"m", m}, {"b", b}};
                    v.pass = rep.holds;
                    if (!v.pass) {
                        auto str = [](const std::variant<Int, XPoly>& side) {
                            if (const Int* iv = std::get_if<Int>(&side)) return iv->get_str();
                            return std::get<XPoly>(side).to_string();
                        };
                        v.witness = "lhs " + str(rep.lhs) + " != rhs " + str(rep.rhs);
                    }
                    out.push_back(std::move(v));
                }
                return out;
            });
        },
        [](const CellArgs& p) { return p["m"] <= p["n"]; });
    return reg;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> reg = build_registry();
    return reg;
}

const Entry& find_entry(std::string_view id) {
    for (const auto& e : registry())
        if (e.info.id == id) return e;
    throw std::invalid_argument("unknown statement '" + std::string(id) + "'; known statements: " + catalog_listing());
}

}  // namespace

const std::vector<StatementInfo>& statement_catalog() {
    static const std::vector<StatementInfo> infos = [] {
        std::vector<StatementInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

const StatementInfo* find_statement(std::string_view id) {
    for (const auto& info : statement_catalog())
        if (info.id == id) return &info;
    return nullptr;
}

std::string catalog_listing() {
    std::string out;
    for (const auto& info : statement_catalog()) {
        if (!out.empty()) out += ", ";
        out += info.id;
    }
    return out;
}

void validate(const GridSpec& spec) {
    const Entry& entry = find_entry(spec.statement);
    for (const auto& [name, range] : spec.ranges) {
        auto it = std::find_if(entry.info.params.begin(), entry.info.params.end(),
                               [&](const ParamSchema& s) { return s.name == name; });
        if (it == entry.info.params.end())
            throw std::invalid_argument(spec.statement + " has no parameter '" + name + "'");
        if (range.lo > range.hi)
            throw std::invalid_argument("range for '" + name + "' is empty (" + std::to_string(range.lo) + ".." +
                                        std::to_string(range.hi) + ")");
        if (range.lo < it->min)
            throw std::invalid_argument("'" + name + "' must be >= " + std::to_string(it->min) + " for " +
                                        spec.statement);
    }
    for (const auto& s : entry.info.params)
        if (!s.fallback && !spec.ranges.contains(s.name))
            throw std::invalid_argument(spec.statement + " requires a range for '" + s.name + "'");
}

std::vector<GridCell> enumerate_cells(const GridSpec& spec) {
    validate(spec);
    const Entry& entry = find_entry(spec.statement);
    std::vector<ParamRange> ranges;
    for (const auto& s : entry.info.params) {
        auto it = spec.ranges.find(s.name);
        ranges.push_back(it != spec.ranges.end() ? it->second : ParamRange{*s.fallback, *s.fallback});
    }

    std::vector<GridCell> cells;
    GridCell cur;
    for (std::size_t i = 0; i < ranges.size(); ++i) cur.emplace_back(entry.info.params[i].name, ranges[i].lo);
    while (true) {
        if (entry.in_domain(CellArgs(cur))) cells.push_back(cur);
        std::size_t i = ranges.size();
        while (i > 0) {
            --i;
            if (cur[i].second < ranges[i].hi) {
                ++cur[i].second;
                break;
            }
            cur[i].second = ranges[i].lo;
            if (i == 0) return cells;
        }
        if (ranges.empty()) return cells;
    }
}

std::vector<Verdict> grid_verify(const GridSpec& spec) {
    const Entry& entry = find_entry(spec.statement);
    const std::vector<GridCell> cells = enumerate_cells(spec);
    std::vector<std::vector<Verdict>> results(cells.size());

    std::size_t workers = spec.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.workers;
    workers = std::min(workers, std::max<std::size_t>(cells.size(), 1));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            try {
                Stopwatch clock;
                const bool fault = spec.fault_cell && *spec.fault_cell == i;
                results[i] = entry.evaluate(cells[i], fault);
                for (auto& v : results[i])
                    if (v.elapsed.count() == 0) v.elapsed = clock.elapsed();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(cells.size());
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Verdict> out;
    for (auto& r : results)
        for (auto& v : r) out.push_back(std::move(v));
    return out;
}

bool all_pass(const std::vector<Verdict>& verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

}  // namespace qcong
