#include "aqtab/io.hpp"

#include <doctest.h>

using namespace aqtab;

TEST_CASE("inline flags")
{
    const auto pairs = parse_pairs_flag(" 2,1; 3,1 ;0,2");
    CHECK(pairs == std::vector<BlockPair>{{2, 1}, {3, 1}, {0, 2}});
    CHECK(parse_lambda_flag("0, -2,+4") == std::vector<std::int64_t>{0, -2, 4});
    CHECK_THROWS_AS(parse_pairs_flag("2,1;3"), Error);
    CHECK_THROWS_AS(parse_pairs_flag("2,x"), Error);
    CHECK_THROWS_AS(parse_lambda_flag("0,,1"), Error);
}

TEST_CASE("json input")
{
    const auto doc = parse_input_json(R"({"pairs": [[2,1],[3,1],[0,2]], "lambda": [0,2,4]})");
    CHECK(doc.pairs.size() == 3);
    REQUIRE(doc.lambda);
    CHECK(*doc.lambda == std::vector<std::int64_t>{0, 2, 4});
    const auto in = to_validated(doc);
    CHECK(in.datum.n() == 9);

    CHECK_FALSE(parse_input_json(R"({"pairs": [[1,0]]})").lambda);
    CHECK_THROWS_AS(to_validated(parse_input_json(R"({"pairs": [[1,0]]})")), Error);
    CHECK_THROWS_AS(parse_input_json("{"), Error);
    CHECK_THROWS_AS(parse_input_json(R"({"pairs": [[1.5,0]]})"), Error);
    CHECK_THROWS_AS(parse_input_json(R"({"pairs": [[1,0,2]]})"), Error);
    CHECK_THROWS_AS(parse_input_json(R"([1,2])"), Error);
}

TEST_CASE("json output")
{
    CHECK(to_json(HalfInt::from_doubled(3)).dump() == R"({"doubled":3})");
    const ParabolicDatum d{{2, 1}, {3, 1}, {0, 2}};
    const auto j = to_json(build_quasitableau(d, {0, 2, 4}));
    CHECK(j["shape"].dump() == "[3,2,2,1,1]");
    CHECK(j["sign_rows"][0] == "-+-");
    CHECK(j["entry_rows"][4][0] == "0");
    CHECK(j["cells"][0].dump() == R"({"row":1,"col":1,"sign":"-","entry":{"doubled":8},"block":1})");

    const auto rc = to_json(classify(d, {0, 2, 4}));
    CHECK(rc.dump() ==
          R"({"label":"nice","good":false,"weakly_good":false,"nice":true,"fair":true,"weakly_fair":true,"mediocre":true})");

    const auto v = to_json(dirac_index_nonzero(d, {0, 2, 4}));
    CHECK(v["witness"].dump() == R"({"a":[1,2],"b":[1,0]})");
    CHECK(v["dirac_index_nonzero"] == true);

    const auto e = error_json(ErrorKind::ModuleVanishes, "pair 1");
    CHECK(e.dump() == R"({"error":{"kind":"ModuleVanishes","summary":"module vanishes","message":"pair 1"}})");
}

TEST_CASE("ascii rendering")
{
    const ParabolicDatum d{{1, 1}, {1, 1}};
    CHECK(render_ascii(build_signed_tableau(d), false) == "+ -\n- +\n");
    CHECK(render_ascii(build_signed_tableau(d), true) == "+ -\n1 2\n- +\n1 2\n");
    CHECK(render_ascii(build_quasitableau(d, {0, 2}), false) == "3/2 3/2\n1/2 1/2\n");
}

TEST_CASE("latex rendering")
{
    const ParabolicDatum d{{1, 1}, {1, 1}};
    CHECK(render_latex(build_quasitableau(d, {0, 2}), false) ==
          "\\begin{array}{cc}\n\\tfrac{3}{2} & \\tfrac{3}{2} \\\\\n\\tfrac{1}{2} & \\tfrac{1}{2}\n\\end{array}\n");
    CHECK(render_latex(build_signed_tableau(ParabolicDatum{{1, 0}}), true) ==
          "\\begin{array}{c}\n+_{1}\n\\end{array}\n");
}
