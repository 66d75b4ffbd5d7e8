#pragma once

// Input parsing, JSON serialization and text rendering for the command line
// tool. JSON key order is fixed; half-integers are written as {"doubled": k}.

#include "aqtab/core.hpp"
#include "aqtab/criteria.hpp"
#include "aqtab/oracle.hpp"
#include "aqtab/ranges.hpp"
#include "aqtab/tableau.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aqtab {

using Json = nlohmann::ordered_json;

// {"pairs": [[p, q], ...], "lambda": [l, ...]}; lambda may be absent.
struct InputDocument {
    std::vector<BlockPair> pairs;
    std::optional<std::vector<std::int64_t>> lambda;
};

InputDocument parse_input_json(std::string_view text);
// "2,1;3,1;0,2"
std::vector<BlockPair> parse_pairs_flag(std::string_view text);
// "0,2,4"
std::vector<std::int64_t> parse_lambda_flag(std::string_view text);

// Builds the datum and checks the lambda length; throws if lambda is absent.
ValidatedInput to_validated(const InputDocument& doc);

Json to_json(HalfInt v);
Json to_json(const Weight& w);
Json to_json(const ParabolicDatum& d);
Json to_json(const LambdaParam& l);
Json to_json(const InputDocument& doc);
Json to_json(const RangeClass& rc);
Json to_json(const FeasibilitySolution& s);
Json to_json(const Verdict& v);
Json to_json(const Counterexample& c);
Json to_json(const SweepReport& r);
Json to_json(const PartitionedTableau& t);
// {"error": {"kind": ..., "summary": ..., "message": ...}}
Json error_json(ErrorKind kind, std::string_view message);

// "module vanishes", "not in nice range", ...
std::string_view describe(ErrorKind kind);

// One line per row, cells right-aligned to a common width. With show_blocks,
// each row is followed by a line giving the block index under every cell.
std::string render_ascii(const PartitionedTableau& t, bool show_blocks);
// Body of an array environment: "\begin{array}{ccc}" ... "\end{array}".
std::string render_latex(const PartitionedTableau& t, bool show_blocks);

} // namespace aqtab
