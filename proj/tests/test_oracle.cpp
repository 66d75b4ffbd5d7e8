#include "aqtab/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace aqtab;

TEST_CASE("parabolic enumeration")
{
    const auto one = enumerate_parabolics(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == ParabolicDatum{{0, 1}});
    CHECK(one[1] == ParabolicDatum{{1, 0}});

    CHECK(parabolic_count(1) == 2);
    CHECK(parabolic_count(2) == 7);
    CHECK(enumerate_parabolics(2).size() == 9);

    for (int n_max = 1; n_max <= 6; ++n_max) {
        const auto all = enumerate_parabolics(n_max);
        std::uint64_t expected = 0;
        for (int n = 1; n <= n_max; ++n)
            expected += parabolic_count(n);
        CHECK(all.size() == expected);
        CHECK(std::set<ParabolicDatum>(all.begin(), all.end()).size() == all.size());
    }
    CHECK(parabolic_count(8) == 15759 - 4615);
}

TEST_CASE("parabolic enumeration order")
{
    std::vector<ParabolicDatum> seen;
    for_each_parabolic(3, [&](const ParabolicDatum& d) { seen.push_back(d); });
    CHECK(seen == enumerate_parabolics(3));
    for (std::size_t k = 1; k < seen.size(); ++k)
        CHECK(seen[k - 1].n() <= seen[k].n());
}

TEST_CASE("lambda grid")
{
    CHECK(enumerate_lambdas(ParabolicDatum{{1, 1}}, 3) == std::vector<LambdaParam>{{0}});
    CHECK(enumerate_lambdas(ParabolicDatum{{1, 0}, {0, 1}}, 1) ==
          std::vector<LambdaParam>{{0, -1}, {0, 0}, {0, 1}});
    CHECK(enumerate_lambdas(ParabolicDatum{{1, 0}, {0, 1}, {1, 1}}, 2).size() == 25);

    const std::vector<int> upper{1, -1};
    std::vector<LambdaParam> seen;
    for_each_lambda(3, -1, upper, [&](const LambdaParam& l) { seen.push_back(l); });
    CHECK(seen == std::vector<LambdaParam>{{0, -1, -2}, {0, 0, -1}, {0, 1, 0}});

    const std::vector<int> empty{-2};
    int count = 0;
    for_each_lambda(2, -1, empty, [&](const LambdaParam&) { ++count; });
    CHECK(count == 0);
}

TEST_CASE("report merge keeps the smallest counterexample")
{
    SweepReport a;
    a.name = "x";
    a.agreements = 3;
    a.record_failure(ParabolicDatum{{2, 0}}, std::nullopt, "later");
    SweepReport b;
    b.agreements = 1;
    b.add_statistic("s", 2);
    b.record_failure(ParabolicDatum{{1, 0}}, LambdaParam{0}, "earlier");
    const auto m = merge(a, b);
    CHECK(m.agreements == 4);
    CHECK(m.disagreements == 2);
    REQUIRE(m.first_counterexample);
    CHECK(m.first_counterexample->detail == "earlier");
    CHECK_FALSE(m.clean());
    CHECK(m.statistics == std::vector<std::pair<std::string, std::uint64_t>>{{"s", 2}});
}

TEST_CASE("direct K-dominance")
{
    const ParabolicDatum d{{2, 1}, {1, 1}};
    CHECK(is_k_dominant_direct(d, Weight({HalfInt(3), HalfInt(3), HalfInt(5), HalfInt(2), HalfInt(4)})));
    CHECK_FALSE(is_k_dominant_direct(d, Weight({HalfInt(3), HalfInt(3), HalfInt(5), HalfInt(4), HalfInt(6)})));
}

TEST_CASE("small sweeps are clean")
{
    CHECK(sweep_overlap(5).clean());
    CHECK(sweep_positional_lemma(5).clean());
    CHECK(sweep_dirac_equivalence(4, 4).clean());
    const auto nice = sweep_nice_range(4, 4);
    CHECK(nice.antitableau.clean());
    CHECK(nice.mediocre_agreement.clean());
    CHECK(nice.multiplicity_bounds.clean());
    CHECK(nice.k_dominance.clean());
    CHECK(sweep_range_ladder(4, 3).clean());
}

TEST_CASE("threaded sweeps agree with the serial run")
{
    const auto serial = sweep_dirac_equivalence(5, 3);
    const auto threaded = sweep_dirac_equivalence(5, 3, SweepOptions{3});
    CHECK(serial.agreements == threaded.agreements);
    CHECK(serial.lambda_points == threaded.lambda_points);
    CHECK(serial.statistics == threaded.statistics);
}

TEST_CASE("the sweep sees the hand examples")
{
    const auto dirac = sweep_dirac_equivalence(6, 2);
    CHECK(dirac.datums == 1351);
    CHECK(dirac.clean());
}
