#ifndef QCONG_GRID_HPP
#define QCONG_GRID_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/verdict.hpp"

namespace qcong {

/// Inclusive integer range.
struct ParamRange {
    Exp lo = 1;
    Exp hi = 1;
};

struct ParamSchema {
    std::string name;
    Exp min = 1;
    /// Used when the grid does not give a range; nullopt means required.
    std::optional<Exp> fallback;
};

struct StatementInfo {
    std::string id;
    std::string summary;
    std::vector<ParamSchema> params;
    Status status = Status::proved;
};

/// Every statement the grid runner knows, in a stable order.
const std::vector<StatementInfo>& statement_catalog();
const StatementInfo* find_statement(std::string_view id);
/// "id1, id2, ..." for error messages.
std::string catalog_listing();

struct GridSpec {
    std::string statement;
    std::map<std::string, ParamRange> ranges;
    /// 0 means std::thread::hardware_concurrency().
    std::size_t workers = 1;
    /// Test hook: perturbs the checked quantity of the cell with this index
    /// (in enumeration order) by adding 1, so the verdict must fail.
    std::optional<std::size_t> fault_cell;
};

/// Validates ranges against the statement schema; throws std::invalid_argument
/// for unknown statements, unknown parameters, missing required parameters,
/// lo > hi, or endpoints below the schema minimum.
void validate(const GridSpec& spec);

/// One parameter assignment, in schema order.
using GridCell = std::vector<std::pair<std::string, Exp>>;

/// Cartesian product of the ranges, lexicographic in schema order, with
/// cells outside the statement's domain (e.g. odd n where even n is
/// required) dropped.
std::vector<GridCell> enumerate_cells(const GridSpec& spec);

/// Evaluates the statement on every cell using a bounded worker pool. The
/// result order follows enumerate_cells regardless of the worker count.
std::vector<Verdict> grid_verify(const GridSpec& spec);

bool all_pass(const std::vector<Verdict>& verdicts);

}  // namespace qcong

#endif  // QCONG_GRID_HPP
