#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "qcong/grid.hpp"
#include "qcong/report.hpp"

using namespace qcong;

namespace {

GridSpec spec(std::string id, std::map<std::string, ParamRange> ranges, std::size_t workers = 1) {
    return GridSpec{std::move(id), std::move(ranges), workers, std::nullopt};
}

std::string jsonl(const std::vector<Verdict>& v) {
    std::ostringstream out;
    emit_jsonl(v, out);
    return out.str();
}

}  // namespace

TEST(Catalog, ContainsEveryStatement) {
    for (const char* id : {"thm-qsum-plain", "thm-qsum-alternating", "thm-qsum-product", "thm-qsum-general",
                           "thm-int-plain", "thm-int-alternating", "thm-int-lcm", "lemma-23", "lemma-31",
                           "lemma-qlucas", "conj-52-even", "conj-54-ii", "conj-54-iii", "identity-suite"})
        EXPECT_NE(find_statement(id), nullptr) << id;
    EXPECT_EQ(find_statement("nope"), nullptr);
    EXPECT_EQ(find_statement("conj-54-ii")->status, Status::conjecture_empirical);
    EXPECT_NE(catalog_listing().find("lemma-qlucas"), std::string::npos);
}

TEST(Grid, Validation) {
    EXPECT_THROW(validate(spec("nope", {})), std::invalid_argument);
    EXPECT_THROW(validate(spec("thm-qsum-plain", {})), std::invalid_argument);
    EXPECT_THROW(validate(spec("thm-qsum-plain", {{"n", {1, 3}}})), std::invalid_argument);
    EXPECT_THROW(validate(spec("thm-qsum-plain", {{"n", {4, 3}}})), std::invalid_argument);
    EXPECT_THROW(validate(spec("thm-qsum-plain", {{"n", {2, 3}}, {"beta", {1, 1}}})), std::invalid_argument);
    EXPECT_NO_THROW(validate(spec("thm-qsum-general", {{"n", {2, 3}}, {"beta", {1, 2}}})));
    EXPECT_NO_THROW(validate(spec("lemma-23", {{"a", {0, 1}}, {"b", {0, 2}}, {"d", {4, 5}}})));
}

TEST(Grid, CellsAreLexicographicWithDefaults) {
    const auto cells = enumerate_cells(spec("thm-qsum-plain", {{"n", {2, 3}}, {"alpha", {1, 2}}}));
    ASSERT_EQ(cells.size(), 4u);
    EXPECT_EQ(cells[0], (GridCell{{"n", 2}, {"alpha", 1}, {"m", 1}, {"r", 1}}));
    EXPECT_EQ(cells[1], (GridCell{{"n", 2}, {"alpha", 2}, {"m", 1}, {"r", 1}}));
    EXPECT_EQ(cells[3], (GridCell{{"n", 3}, {"alpha", 2}, {"m", 1}, {"r", 1}}));
}

TEST(Grid, DomainFilters) {
    EXPECT_EQ(enumerate_cells(spec("conj-54-iii", {{"n", {1, 8}}})).size(), 4u);
    const auto lucas = enumerate_cells(spec("lemma-qlucas", {{"d", {3, 3}}, {"b", {0, 5}}, {"t", {0, 5}}}));
    EXPECT_EQ(lucas.size(), 9u);
    EXPECT_EQ(enumerate_cells(spec("identity-suite", {{"n", {1, 3}}, {"m", {1, 3}}})).size(), 6u);
}

TEST(Grid, SweepPasses) {
    const auto v = grid_verify(spec("thm-qsum-plain", {{"n", {2, 6}}}));
    ASSERT_EQ(v.size(), 5u);
    EXPECT_TRUE(all_pass(v));
    for (const auto& x : v) {
        EXPECT_EQ(x.statement, "thm-qsum-plain");
        EXPECT_FALSE(x.witness);
    }
}

TEST(Grid, EmptyGridPasses) {
    const auto v = grid_verify(spec("conj-54-iii", {{"n", {1, 1}}}));
    EXPECT_TRUE(v.empty());
    EXPECT_TRUE(all_pass(v));
}

TEST(Grid, EveryStatementRuns) {
    const std::map<std::string, std::map<std::string, ParamRange>> small = {
        {"thm-qsum-plain", {{"n", {2, 4}}}},
        {"thm-qsum-alternating", {{"n", {2, 4}}}},
        {"thm-qsum-product", {{"n", {2, 4}}}},
        {"thm-qsum-general", {{"n", {2, 4}}, {"beta", {1, 2}}}},
        {"thm-int-plain", {{"n", {1, 4}}}},
        {"thm-int-alternating", {{"n", {1, 4}}}},
        {"thm-int-lcm", {{"n", {1, 4}}}},
        {"lemma-23", {{"a", {0, 1}}, {"b", {0, 3}}, {"d", {3, 5}}}},
        {"lemma-31", {{"d", {2, 6}}}},
        {"lemma-qlucas", {{"d", {2, 3}}, {"a", {0, 2}}, {"b", {0, 2}}, {"s", {0, 1}}, {"t", {0, 2}}}},
        {"qint-factorization", {{"n", {2, 10}}}},
        {"conj-52-even", {{"n", {1, 6}}}},
        {"conj-54-ii", {{"n", {1, 4}}}},
        {"conj-54-iii", {{"n", {1, 6}}}},
        {"identity-suite", {{"n", {1, 4}}, {"m", {1, 4}}, {"b", {0, 2}}}},
    };
    for (const auto& info : statement_catalog()) {
        auto it = small.find(info.id);
        ASSERT_NE(it, small.end()) << "no small grid for " << info.id;
        const auto v = grid_verify(spec(info.id, it->second));
        EXPECT_FALSE(v.empty()) << info.id;
        EXPECT_TRUE(all_pass(v)) << info.id;
        for (const auto& x : v) EXPECT_EQ(x.status, info.status);
    }
}

TEST(Grid, OrderIndependentOfWorkers) {
    const std::map<std::string, ParamRange> r = {{"n", {2, 9}}, {"alpha", {1, 2}}, {"m", {1, 2}}};
    const std::string one = jsonl(grid_verify(spec("thm-qsum-alternating", r, 1)));
    for (std::size_t w : {2u, 3u, 8u}) EXPECT_EQ(jsonl(grid_verify(spec("thm-qsum-alternating", r, w))), one);
}

TEST(Grid, FaultInjection) {
    GridSpec s = spec("thm-qsum-plain", {{"n", {2, 5}}}, 2);
    s.fault_cell = 2;
    const auto v = grid_verify(s);
    ASSERT_EQ(v.size(), 4u);
    EXPECT_FALSE(all_pass(v));
    for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_EQ(v[i].pass, i != 2);
        EXPECT_EQ(v[i].witness.has_value(), i == 2);
    }
    EXPECT_NE(*v[2].witness, "0");

    GridSpec lemma = spec("lemma-31", {{"d", {2, 3}}});
    lemma.fault_cell = 0;
    EXPECT_THROW(grid_verify(lemma), std::invalid_argument);
}

TEST(Grid, WorkerExceptionsPropagate) {
    GridSpec s = spec("lemma-31", {{"d", {2, 12}}}, 4);
    s.fault_cell = 7;
    EXPECT_THROW(grid_verify(s), std::invalid_argument);
    EXPECT_THROW(grid_verify(spec("unknown", {})), std::invalid_argument);
}

TEST(Report, JsonShape) {
    Verdict v;
    v.statement = "thm-qsum-plain";
    v.params = {{"n", 3}, {"alpha", 1}};
    v.pass = false;
    v.witness = "1 + q";
    v.elapsed = std::chrono::milliseconds(42);
    EXPECT_EQ(to_json(v).dump(),
              R"({"statement":"thm-qsum-plain","params":{"n":3,"alpha":1},"pass":false,"witness":"1 + q",)"
              R"("elapsed_ms":0,"status":"proved"})");
    EXPECT_EQ(to_json(v, {true})["elapsed_ms"], 42);
    v.witness.reset();
    v.status = Status::conjecture_empirical;
    EXPECT_TRUE(to_json(v)["witness"].is_null());
    EXPECT_EQ(to_json(v)["status"], "conjecture-empirical");
}

TEST(Report, SummaryLines) {
    EXPECT_EQ(jsonl({}), "{\"summary\":{\"total\":0,\"passed\":0,\"failed\":0}}\n");
    Verdict ok;
    ok.statement = "s";
    ok.pass = true;
    const std::string one = jsonl({ok});
    EXPECT_EQ(std::count(one.begin(), one.end(), '\n'), 2);

    Verdict bad = ok;
    bad.pass = false;
    bad.witness = "1";
    const std::string text = jsonl({ok, bad, bad});
    const std::string last = text.substr(text.rfind('\n', text.size() - 2) + 1);
    const auto parsed = nlohmann::json::parse(last);
    EXPECT_EQ(parsed["summary"]["failed"], 2);
    EXPECT_EQ(parsed["summary"]["passed"], 1);
    EXPECT_EQ(parsed["summary"]["total"], 3);
}

TEST(Report, TextFormat) {
    Verdict v;
    v.statement = "lemma-31";
    v.params = {{"d", 4}};
    v.pass = true;
    std::ostringstream out;
    emit_text({v}, out);
    EXPECT_EQ(out.str(), "PASS lemma-31 d=4\ntotal 1, passed 1, failed 0\n");
}

TEST(Report, BadStreamThrows) {
    std::ostringstream out;
    out.setstate(std::ios::badbit);
    EXPECT_THROW(emit_jsonl({}, out), ReportIoError);
}
