#include "aqtab/combinatorics.hpp"
#include "aqtab/tableau.hpp"

#include <doctest.h>

using namespace aqtab;

namespace {

const ParabolicDatum example{{2, 1}, {3, 1}, {0, 2}};

std::vector<std::vector<int>> block_rows(const PartitionedTableau& t)
{
    std::vector<std::vector<int>> out;
    for (std::size_t k = 1; k <= t.row_count(); ++k) {
        out.emplace_back();
        for (const auto& c : t.row(k))
            out.back().push_back(c.block);
    }
    return out;
}

std::vector<std::vector<std::string>> entry_rows(const PartitionedTableau& t)
{
    std::vector<std::vector<std::string>> out;
    for (std::size_t k = 1; k <= t.row_count(); ++k) {
        out.emplace_back();
        for (const auto& c : t.row(k))
            out.back().push_back(c.entry->to_string());
    }
    return out;
}

} // namespace

TEST_CASE("signed tableau of the three-block example")
{
    const auto t = build_signed_tableau(example);
    CHECK(t.shape() == std::vector<int>{3, 2, 2, 1, 1});
    CHECK(t.sign_rows() == std::vector<std::string>{"-+-", "+-", "+-", "+", "+"});
    CHECK(block_rows(t) == std::vector<std::vector<int>>{{1, 2, 3}, {1, 2}, {1, 3}, {2}, {2}});
    CHECK(t.block_size(2) == 4);
    CHECK_FALSE(t.structure_violation());
    CHECK(check_q_consistent(t, example).consistent);
    CHECK(skipped_rows(t, 2) == std::vector<int>{3});
    CHECK(skipped_rows(t, 3) == std::vector<int>{2});
}

TEST_CASE("single block")
{
    const auto t = build_signed_tableau(ParabolicDatum{{1, 0}});
    CHECK(t.sign_rows() == std::vector<std::string>{"+"});
    CHECK(t.cells()[0].block == 1);

    const auto col = build_signed_tableau(ParabolicDatum{{2, 1}});
    CHECK(col.shape() == std::vector<int>{1, 1, 1});
    CHECK(col.sign_rows() == std::vector<std::string>{"+", "+", "-"});
}

TEST_CASE("two balanced blocks")
{
    const ParabolicDatum d{{1, 1}, {1, 1}};
    const auto t = build_signed_tableau(d);
    CHECK(t.sign_rows() == std::vector<std::string>{"+-", "-+"});
    CHECK(block_rows(t) == std::vector<std::vector<int>>{{1, 2}, {1, 2}});

    const auto q = build_quasitableau(d, {0, 2});
    CHECK(entry_rows(q) == std::vector<std::vector<std::string>>{{"3/2", "3/2"}, {"1/2", "1/2"}});
}

TEST_CASE("quasitableau of the three-block example")
{
    const auto q = build_quasitableau(example, {0, 2, 4});
    CHECK(entry_rows(q) ==
          std::vector<std::vector<std::string>>{{"4", "3", "1"}, {"3", "2"}, {"2", "0"}, {"1"}, {"0"}});
    CHECK(q.kind() == TableauKind::Both);
    CHECK(is_antitableau(q));
    CHECK_FALSE(is_antitableau(build_quasitableau(example, {0, 3, 4})));
}

TEST_CASE("quasitableau length mismatch")
{
    CHECK_THROWS_AS(build_quasitableau(example, {0, 2}), Error);
}

TEST_CASE("canonical form sorts equal-length rows")
{
    const std::vector<std::vector<Cell>> rows{{{0, 0, Sign::Minus, {}, 1}}, {{0, 0, Sign::Plus, {}, 1}}};
    const PartitionedTableau t(rows, 1, TableauKind::SignedOnly);
    CHECK(canonicalize(t).sign_rows() == std::vector<std::string>{"+", "-"});
    CHECK(canonicalize(canonicalize(t)) == canonicalize(t));
}

TEST_CASE("first-column order does not change the signed tableau")
{
    for (const auto& d : {example, ParabolicDatum{{1, 2}, {2, 1}}, ParabolicDatum{{0, 3}, {2, 2}, {1, 0}}}) {
        const auto a = build_signed_tableau(d, {SignOrder::PlusFirst, SignOrder::PlusFirst});
        const auto b = build_signed_tableau(d, {SignOrder::MinusFirst, SignOrder::MinusFirst});
        CHECK(canonicalize(a).sign_rows() == canonicalize(b).sign_rows());
        CHECK(check_q_consistent(b, d).consistent);
        for (int i = 1; i < static_cast<int>(d.r()); ++i)
            CHECK(overlap_by_definition(a, i) == overlap_by_definition(b, i));
    }
}

TEST_CASE("cell lookup and block cells")
{
    const auto t = build_signed_tableau(example);
    REQUIRE(t.at(1, 3) != nullptr);
    CHECK(t.at(1, 3)->block == 3);
    CHECK(t.at(2, 3) == nullptr);
    CHECK(t.block_cell(2, 3).row == 4);
    CHECK_THROWS_AS(t.block_cells(4), Error);
}

TEST_CASE("with_entries and set_block_entries agree")
{
    const auto q = build_quasitableau(example, {0, 2, 4});
    std::vector<HalfInt> row_major;
    for (const auto& c : q.cells())
        row_major.push_back(*c.entry);
    CHECK(q.signs_only().with_entries(row_major) == q);

    auto skeleton = build_signed_tableau(example);
    std::vector<HalfInt> by_block;
    for (int v : {4, 3, 2, 3, 2, 1, 0, 1, 0})
        by_block.emplace_back(v);
    skeleton.set_block_entries(by_block);
    CHECK(skeleton == q);
    CHECK_THROWS_AS(skeleton.set_block_entries(std::span(by_block).first(3)), Error);
}
