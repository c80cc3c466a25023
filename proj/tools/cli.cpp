#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <string_view>
#include <thread>
#include <vector>

#include "qcong/arith.hpp"
#include "qcong/congruence.hpp"
#include "qcong/q_objects.hpp"
#include "qcong/report.hpp"
#include "qcong/sun_poly.hpp"

namespace qcong::cli {

namespace {

Exp parse_value(std::string_view text, std::string_view what) {
    Exp v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw UsageError("invalid integer '" + std::string(text) + "' for " + std::string(what));
    return v;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
    const Exp v = parse_value(text, what);
    if (v < 0) throw UsageError(std::string(what) + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

// --- eval ------------------------------------------------------------------

struct EvalObject {
    std::string name;
    std::vector<ParamSchema> params;
    std::function<std::string(const std::map<std::string, Exp>&)> render;
};

const std::vector<EvalObject>& eval_objects() {
    static const std::vector<EvalObject> objects = [] {
        const std::optional<Exp> req;
        std::vector<EvalObject> v;
        v.push_back({"w", {{"n", 1, req}, {"alpha", 1, 1}},
                     [](const auto& p) { return w_alpha_poly(p.at("n"), p.at("alpha")).to_string(); }});
        v.push_back({"schroder", {{"n", 1, req}}, [](const auto& p) { return schroder_poly(p.at("n")).to_string(); }});
        v.push_back({"qw", {{"k", 1, req}, {"alpha", 1, 1}},
                     [](const auto& p) { return q_w_poly(p.at("k"), p.at("alpha")).to_string(); }});
        v.push_back({"qw-alt", {{"k", 1, req}, {"alpha", 1, 1}},
                     [](const auto& p) { return q_w_poly_alt(p.at("k"), p.at("alpha")).to_string(); }});
        v.push_back({"qint", {{"n", -1000000, req}}, [](const auto& p) { return q_integer(p.at("n")).to_string(); }});
        v.push_back({"qbinom", {{"n", -1000000, req}, {"k", -1000000, req}},
                     [](const auto& p) { return q_binomial(p.at("n"), p.at("k")).to_string(); }});
        v.push_back({"cyclotomic", {{"d", 1, req}}, [](const auto& p) { return cyclotomic(p.at("d")).to_string(); }});
        v.push_back({"b", {{"a", 0, 0}, {"b", 1, req}, {"d", 3, req}, {"alpha", 1, 1}},
                     [](const auto& p) {
                         return b_poly({p.at("a"), p.at("b"), p.at("d"), p.at("alpha")}).to_string();
                     }});
        const std::vector<ParamSchema> namr = {{"n", 1, req}, {"alpha", 1, 1}, {"m", 1, 1}, {"r", 1, 1}};
        v.push_back({"qsum-plain", namr, [](const auto& p) {
                         return qsum_plain(p.at("n"), p.at("alpha"), p.at("m"), p.at("r")).to_string();
                     }});
        v.push_back({"qsum-alternating", namr, [](const auto& p) {
                         return qsum_alternating(p.at("n"), p.at("alpha"), p.at("m"), p.at("r")).to_string();
                     }});
        v.push_back({"qsum-product", namr, [](const auto& p) {
                         return qsum_product(p.at("n"), p.at("alpha"), p.at("m"), p.at("r")).to_string();
                     }});
        v.push_back({"qsum-general",
                     {{"n", 1, req}, {"alpha", 1, 1}, {"beta", 1, 1}, {"m", 1, 1}, {"r", 1, 1}},
                     [](const auto& p) {
                         return qsum_general(p.at("n"), p.at("alpha"), p.at("beta"), p.at("m"), p.at("r"))
                             .to_string();
                     }});
        return v;
    }();
    return objects;
}

const EvalObject* find_eval(std::string_view name) {
    for (const auto& o : eval_objects())
        if (o.name == name) return &o;
    return nullptr;
}

std::string eval_listing() {
    std::string s;
    for (const auto& o : eval_objects()) s += (s.empty() ? "" : ", ") + o.name;
    return s;
}

std::map<std::string, Exp> eval_args(const EvalObject& obj, const CliConfig& config) {
    std::map<std::string, Exp> args;
    for (const auto& [name, range] : config.ranges) {
        auto it = std::find_if(obj.params.begin(), obj.params.end(), [&](const auto& s) { return s.name == name; });
        if (it == obj.params.end()) throw UsageError("eval " + obj.name + " has no parameter --" + name);
        if (range.lo != range.hi) throw UsageError("eval takes single values, got a range for --" + name);
        if (range.lo < it->min)
            throw UsageError("--" + name + " must be >= " + std::to_string(it->min) + " for eval " + obj.name);
        args[name] = range.lo;
    }
    for (const auto& s : obj.params) {
        if (args.contains(s.name)) continue;
        if (!s.fallback) throw UsageError("eval " + obj.name + " requires --" + s.name);
        args[s.name] = *s.fallback;
    }
    return args;
}

// --- selftest --------------------------------------------------------------

struct SelfCheck {
    std::string name;
    std::function<bool()> run;
};

std::vector<SelfCheck> self_checks() {
    std::vector<SelfCheck> checks;
    checks.push_back({"binomial-pascal", [] {
                          for (Exp n = -12; n <= 12; ++n)
                              for (Exp k = 0; k <= 12; ++k)
                                  if (binomial_general(to_int(n), k) !=
                                      binomial_general(to_int(n - 1), k - 1) + binomial_general(to_int(n - 1), k))
                                      return false;
                          return true;
                      }});
    checks.push_back({"w-closed-forms", [] {
                          for (Exp n = 1; n <= 20; ++n)
                              for (Exp k = 1; k <= n; ++k)
                                  if (w_number(n, k) != w_number_difference_form(n, k)) return false;
                          return true;
                      }});
    checks.push_back({"qint-factorization", [] {
                          for (Exp n = 2; n <= 60; ++n)
                              if (!qint_factorization_check(n)) return false;
                          return true;
                      }});
    checks.push_back({"q-to-1-bridge", [] {
                          for (Exp k = 1; k <= 8; ++k)
                              for (Exp a = 1; a <= 2; ++a)
                                  if (q_w_poly(k, a).eval_q_one() != w_alpha_poly(k, a)) return false;
                          return true;
                      }});
    checks.push_back({"reflected-form", [] {
                          for (Exp k = 1; k <= 6; ++k)
                              for (Exp a = 1; a <= 2; ++a)
                                  if (q_w_poly_alt(k, a) != q_w_poly(k, a)) return false;
                          return true;
                      }});
    checks.push_back({"schroder-and-symmetry", [] {
                          for (Exp n = 1; n <= 12; ++n) {
                              const XPoly& w = w_alpha_poly(n, 1);
                              if (schroder_poly(n) != w) return false;
                              const XPoly sym = affine_subst(w, Int(-1), Int(-1));
                              if (sym != (n % 2 == 1 ? w : -w)) return false;
                          }
                          return true;
                      }});
    auto grid = [](std::string id, std::map<std::string, ParamRange> ranges) {
        return [id = std::move(id), ranges = std::move(ranges)] {
            GridSpec spec{id, ranges, 1, std::nullopt};
            return all_pass(grid_verify(spec));
        };
    };
    checks.push_back({"thm-qsum-plain", grid("thm-qsum-plain", {{"n", {2, 6}}, {"alpha", {1, 2}}})});
    checks.push_back({"thm-qsum-alternating", grid("thm-qsum-alternating", {{"n", {2, 6}}})});
    checks.push_back({"thm-qsum-product", grid("thm-qsum-product", {{"n", {2, 6}}})});
    checks.push_back({"thm-qsum-general", grid("thm-qsum-general", {{"n", {2, 5}}, {"beta", {1, 2}}})});
    checks.push_back({"thm-int-plain", grid("thm-int-plain", {{"n", {1, 10}}, {"alpha", {1, 2}}})});
    checks.push_back({"thm-int-alternating", grid("thm-int-alternating", {{"n", {1, 10}}})});
    checks.push_back({"thm-int-lcm", grid("thm-int-lcm", {{"n", {1, 8}}, {"beta", {1, 2}}})});
    checks.push_back({"lemma-23", grid("lemma-23", {{"a", {0, 1}}, {"b", {0, 4}}, {"d", {3, 6}}})});
    checks.push_back({"lemma-31", grid("lemma-31", {{"d", {2, 20}}})});
    checks.push_back({"identity-suite", grid("identity-suite", {{"n", {1, 8}}, {"m", {1, 8}}, {"b", {0, 3}}})});
    return checks;
}

int run_selftest(std::ostream& out) {
    bool ok = true;
    for (const auto& check : self_checks()) {
        const bool pass = check.run();
        ok = ok && pass;
        out << (pass ? "PASS " : "FAIL ") << check.name << '\n';
    }
    out << (ok ? "selftest passed" : "selftest FAILED") << '\n';
    return ok ? kExitOk : kExitFailed;
}

int run_table(const CliConfig& config, std::ostream& out) {
    auto it = config.ranges.find("nmax");
    if (it == config.ranges.end()) throw UsageError("table requires --nmax N");
    if (it->second.lo != it->second.hi || it->second.lo < 1) throw UsageError("--nmax must be a single value >= 1");
    for (Exp n = 1; n <= it->second.lo; ++n) {
        out << n << ':';
        for (Exp k = 1; k <= n; ++k) out << ' ' << w_number(n, k);
        out << '\n';
    }
    return kExitOk;
}

int run_verify(const CliConfig& config, std::ostream& out) {
    GridSpec spec;
    spec.statement = *config.target;
    spec.ranges = config.ranges;
    spec.workers = config.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.workers;
    spec.fault_cell = config.fault_cell;
    const std::vector<Verdict> verdicts = grid_verify(spec);

    const ReportOptions opts{config.timing};
    auto emit = [&](std::ostream& sink) {
        if (config.format == Format::jsonl)
            emit_jsonl(verdicts, sink, opts);
        else
            emit_text(verdicts, sink, opts);
    };
    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
        if (!file) throw ReportIoError("cannot open " + *config.output_path + " for writing");
        emit(file);
    } else {
        emit(out);
    }
    return all_pass(verdicts) ? kExitOk : kExitFailed;
}

}  // namespace

std::string usage() {
    return "usage:\n"
           "  qcong verify <statement> [--<param> lo..hi]... [--workers N] [--format jsonl|text]\n"
           "               [--output FILE] [--timing]\n"
           "  qcong eval <object> [--<param> v]...\n"
           "  qcong table --nmax N\n"
           "  qcong selftest\n"
           "statements: " +
           catalog_listing() + "\neval objects: " + eval_listing() + "\n";
}

ParamRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Exp v = parse_value(text, "range");
        return {v, v};
    }
    const ParamRange r{parse_value(std::string_view(text).substr(0, dots), "range start"),
                       parse_value(std::string_view(text).substr(dots + 2), "range end")};
    if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
    return r;
}

CliConfig parse_cli(std::span<const std::string> args) {
    CliConfig config;
    if (args.empty()) throw UsageError("missing command");
    const std::string& cmd = args[0];
    std::size_t i = 1;
    if (cmd == "verify" || cmd == "eval") {
        config.command = cmd == "verify" ? Command::verify : Command::eval;
        if (args.size() < 2 || args[1].starts_with("--")) throw UsageError(cmd + " needs a target");
        config.target = args[1];
        i = 2;
    } else if (cmd == "table") {
        config.command = Command::table;
    } else if (cmd == "selftest") {
        config.command = Command::selftest;
    } else if (cmd == "help" || cmd == "--help" || cmd == "-h") {
        config.command = Command::help;
        return config;
    } else {
        throw UsageError("unknown command '" + cmd + "'");
    }

    for (; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (!arg.starts_with("--") || arg.size() == 2) throw UsageError("unexpected argument '" + arg + "'");
        std::string name = arg.substr(2);
        std::optional<std::string> value;
        if (auto eq = name.find('='); eq != std::string::npos) {
            value = name.substr(eq + 1);
            name.resize(eq);
        }
        if (name == "timing") {
            if (value) throw UsageError("--timing takes no value");
            config.timing = true;
            continue;
        }
        if (!value) {
            if (i + 1 >= args.size()) throw UsageError("--" + name + " needs a value");
            value = args[++i];
        }
        if (name == "workers") {
            config.workers = parse_count(*value, "--workers");
            if (config.workers == 0) throw UsageError("--workers must be positive");
        } else if (name == "format") {
            if (*value == "jsonl")
                config.format = Format::jsonl;
            else if (*value == "text")
                config.format = Format::text;
            else
                throw UsageError("--format must be jsonl or text");
        } else if (name == "output") {
            config.output_path = *value;
        } else if (name == "inject-fault") {
            config.fault_cell = parse_count(*value, "--inject-fault");
        } else {
            if (config.ranges.contains(name)) throw UsageError("--" + name + " given twice");
            config.ranges[name] = parse_range(*value);
        }
    }

    switch (config.command) {
        case Command::verify: {
            if (!find_statement(*config.target))
                throw UsageError("unknown statement '" + *config.target + "'; known statements: " + catalog_listing());
            GridSpec spec;
            spec.statement = *config.target;
            spec.ranges = config.ranges;
            try {
                validate(spec);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            break;
        }
        case Command::eval: {
            const EvalObject* obj = find_eval(*config.target);
            if (!obj) throw UsageError("unknown eval object '" + *config.target + "'; known: " + eval_listing());
            eval_args(*obj, config);
            break;
        }
        case Command::selftest:
            if (!config.ranges.empty()) throw UsageError("selftest takes no parameters");
            break;
        default:
            break;
    }
    return config;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::help:
                out << usage();
                return kExitOk;
            case Command::verify:
                return run_verify(config, out);
            case Command::eval: {
                const EvalObject* obj = find_eval(*config.target);
                if (!obj) throw UsageError("unknown eval object '" + *config.target + "'");
                out << obj->render(eval_args(*obj, config)) << '\n';
                return kExitOk;
            }
            case Command::table:
                return run_table(config, out);
            case Command::selftest:
                return run_selftest(out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ReportIoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CliConfig config;
    try {
        config = parse_cli(args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << usage();
        return kExitUsage;
    }
    return run(config, out, err);
}

}  // namespace qcong::cli
