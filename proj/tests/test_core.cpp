#include "aqtab/core.hpp"

#include <doctest.h>

using namespace aqtab;

namespace {

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::ParseError;
}

} // namespace

TEST_CASE("half integers")
{
    const auto h = HalfInt::from_doubled(3);
    CHECK(h.to_string() == "3/2");
    CHECK(HalfInt::from_doubled(-1).to_string() == "-1/2");
    CHECK(HalfInt(3).to_string() == "3");
    CHECK(HalfInt(0).to_string() == "0");
    CHECK(h + h == HalfInt(3));
    CHECK(h - HalfInt(2) == HalfInt::from_doubled(-1));
    CHECK(HalfInt::from_doubled(-1) < HalfInt(0));
    CHECK_FALSE(h.is_integral());
    CHECK((-h).doubled() == -3);
}

TEST_CASE("datum accessors")
{
    const ParabolicDatum d{{2, 1}, {3, 1}, {0, 2}};
    CHECK(d.r() == 3);
    CHECK(d.p() == 5);
    CHECK(d.q() == 4);
    CHECK(d.n() == 9);
    CHECK(d.n(2) == 4);
    CHECK(d.offset(1) == 0);
    CHECK(d.offset(3) == 7);
    CHECK(d.to_string() == "[(2,1),(3,1),(0,2)]");
    CHECK(kind_of([&] { (void)d.p(0); }) == ErrorKind::BlockOutOfRange);
    CHECK(kind_of([&] { (void)d.q(4); }) == ErrorKind::BlockOutOfRange);
}

TEST_CASE("datum invariants")
{
    CHECK(kind_of([] { ParabolicDatum d(std::vector<BlockPair>{}); }) == ErrorKind::EmptyDatum);
    CHECK(kind_of([] { ParabolicDatum d{{1, 1}, {0, 0}}; }) == ErrorKind::ZeroPair);
    CHECK(kind_of([] { ParabolicDatum d{{-1, 2}}; }) == ErrorKind::ZeroPair);
    CHECK_NOTHROW(ParabolicDatum{{0, 1}});
}

TEST_CASE("validate_input")
{
    CHECK(kind_of([] { validate_input(std::vector<BlockPair>{{1, 1}, {0, 0}}, std::vector<std::int64_t>{0, 1}); }) == ErrorKind::ZeroPair);
    CHECK(kind_of([] { validate_input(ParabolicDatum{{1, 1}, {1, 0}}, LambdaParam{0}); }) == ErrorKind::LengthMismatch);
    const auto in = validate_input(std::vector<BlockPair>{{2, 1}, {3, 1}, {0, 2}}, std::vector<std::int64_t>{0, 2, 4});
    CHECK(in.lambda.gap(1) == 2);
    CHECK(in.lambda.to_string() == "(0,2,4)");
    CHECK(in.lambda.translated(-3) == LambdaParam{-3, -1, 1});
}

TEST_CASE("error text names the kind")
{
    const Error e(ErrorKind::ModuleVanishes, "pair 1");
    CHECK(std::string(e.what()) == "ModuleVanishes: pair 1");
    CHECK(to_string(ErrorKind::NotInNiceRange) == "NotInNiceRange");
}

TEST_CASE("weight blocks")
{
    const ParabolicDatum d{{1, 1}, {0, 1}};
    const Weight w({HalfInt(5), HalfInt(4), HalfInt(1)});
    REQUIRE(w.block(d, 2).size() == 1);
    CHECK(w.block(d, 2)[0] == HalfInt(1));
    CHECK(w.to_string() == "(5,4,1)");
}
