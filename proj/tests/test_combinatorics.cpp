#include "aqtab/combinatorics.hpp"
#include "aqtab/ranges.hpp"

#include <doctest.h>

using namespace aqtab;

namespace {

const ParabolicDatum example{{2, 1}, {3, 1}, {0, 2}};

} // namespace

TEST_CASE("overlap of the three-block example")
{
    const auto t = build_signed_tableau(example);
    CHECK(overlap_by_definition(t, 1) == 2);
    CHECK(overlap_by_definition(t, 2) == 2);
    CHECK(overlap_by_formula(example, 1) == 2);
    CHECK(overlap_by_formula(example, 2) == 2);
    CHECK_THROWS_AS(overlap_by_formula(example, 3), Error);
    CHECK_THROWS_AS(overlap_by_definition(t, 0), Error);
}

TEST_CASE("overlap formula arithmetic")
{
    const ParabolicDatum d{{0, 2}, {1, 1}};
    CHECK(overlap_by_formula(d, 1) == 1);
    CHECK(overlap_by_definition(build_signed_tableau(d), 1) == 1);
}

TEST_CASE("overlap is symmetric under p <-> q")
{
    const ParabolicDatum a{{3, 1}, {0, 2}, {2, 2}};
    const ParabolicDatum b{{1, 3}, {2, 0}, {2, 2}};
    for (int i = 1; i <= 2; ++i)
        CHECK(overlap_by_formula(a, i) == overlap_by_formula(b, i));
}

TEST_CASE("side by side columns overlap fully")
{
    const std::vector<std::vector<Cell>> rows{
        {{0, 0, Sign::Plus, {}, 1}, {0, 0, Sign::Minus, {}, 2}},
        {{0, 0, Sign::Minus, {}, 1}, {0, 0, Sign::Plus, {}, 2}},
        {{0, 0, Sign::Plus, {}, 1}, {0, 0, Sign::Minus, {}, 2}},
    };
    const PartitionedTableau t(rows, 2, TableauKind::SignedOnly);
    CHECK(overlap_by_definition(t, 1) == 3);
}

TEST_CASE("singularity")
{
    const auto q = build_quasitableau(example, {0, 2, 4});
    CHECK(singularity(q, 1) == 2);
    CHECK(singularity(q, 2) == 2);
    CHECK(singularity(build_quasitableau(example, {0, 3, 4}), 1) == 3);
    CHECK(singularity(build_quasitableau(example, {0, -9, -20}), 1) == 0);
    CHECK_THROWS_AS(singularity(build_signed_tableau(example), 1), Error);
}

TEST_CASE("r table")
{
    const auto r = r_table(example, {0, 2, 4});
    CHECK(r.adjacent(1) == 2);
    CHECK(r.adjacent(2) == 2);
    CHECK(r.general(1, 3) == 0);
    CHECK(r.general(3, 1) == 0);
    CHECK(r.adjacent_values() == std::vector<int>{2, 2});
    CHECK(r == r_table(example, nu(example, {0, 2, 4})));
    CHECK_THROWS_AS(r.general(2, 2), Error);

    const auto flat = r_table(example, {0, -1, -3});
    CHECK(flat.adjacent_values() == std::vector<int>{0, 0});
}

TEST_CASE("adjacent R matches the gap in the nice range")
{
    const ParabolicDatum d{{1, 2}, {2, 1}, {1, 1}};
    for (std::int64_t g1 = -3; g1 <= 3; ++g1)
        for (std::int64_t g2 = -2; g2 <= 2; ++g2) {
            const LambdaParam l{0, g1, g1 + g2};
            if (!nice_gap_check(d, l))
                continue;
            const auto r = r_table(d, l);
            CHECK(r.adjacent(1) == std::max<std::int64_t>(0, g1));
            CHECK(r.adjacent(2) == std::max<std::int64_t>(0, g2));
        }
}

TEST_CASE("antitableau")
{
    CHECK(is_antitableau(build_quasitableau(example, {0, 2, 4})));
    CHECK_FALSE(is_antitableau(build_quasitableau(example, {0, 3, 4})));
    CHECK(is_antitableau(build_quasitableau(ParabolicDatum{{0, 1}}, {5})));
    CHECK_THROWS_AS(is_antitableau(build_signed_tableau(example)), Error);
}
