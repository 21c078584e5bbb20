#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ldu/ring.hpp"

using namespace ldu;

TEST_CASE("exact_div divides exactly or refuses") {
    CHECK(exact_div(Int(6), Int(3)) == 2);
    CHECK(exact_div(Int(-6), Int(3)) == -2);
    CHECK(exact_div(Int(6), Int(-3)) == -2);
    CHECK(exact_div(Int(0), Int(5)) == 0);
    CHECK_THROWS_AS(exact_div(Int(7), Int(3)), NotDivisible);
    CHECK_THROWS_AS(exact_div(Int(5), Int(0)), DivisionByZero);
}

TEST_CASE("exact_div handles values past 64 bits") {
    Int big = pow(Int(10), 40) + 7;
    CHECK(exact_div(big * 12345, big) == 12345);
    CHECK_THROWS_AS(exact_div(big * 12345 + 1, big), NotDivisible);
}

TEST_CASE("Rat canonical form") {
    CHECK(Rat(Int(2), Int(4)) == Rat(Int(1), Int(2)));
    CHECK(Rat(Int(1), Int(-2)) == Rat(Int(-1), Int(2)));
    CHECK(Rat(Int(-3), Int(-6)) == Rat(Int(1), Int(2)));
    CHECK(Rat(Int(0), Int(7)).den() == 1);
    CHECK(Rat(Int(0), Int(7)).is_zero());
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), DivisionByZero);
}

TEST_CASE("Rat arithmetic") {
    Rat half(Int(1), Int(2)), third(Int(1), Int(3));
    CHECK(half + third == Rat(Int(5), Int(6)));
    CHECK(half - third == Rat(Int(1), Int(6)));
    CHECK(half * Rat(Int(2), Int(3)) == third);
    CHECK(half / third == Rat(Int(3), Int(2)));
    CHECK(-half == Rat(Int(-1), Int(2)));
    CHECK(half.reciprocal() == Rat(Int(2)));
    CHECK_THROWS_AS(half / Rat(), DivisionByZero);
    CHECK_THROWS_AS(Rat().reciprocal(), DivisionByZero);
}

TEST_CASE("Rat ring boundary") {
    CHECK(Rat(Int(6), Int(3)).is_integer());
    CHECK(Rat(Int(6), Int(3)).to_int() == 2);
    CHECK_FALSE(Rat(Int(1), Int(2)).is_integer());
    CHECK_THROWS_AS(Rat(Int(1), Int(2)).to_int(), NotIntegral);
}

TEST_CASE("Rat rendering") {
    CHECK(Rat(Int(-1), Int(2)).str() == "-1/2");
    CHECK(Rat(Int(4), Int(2)).str() == "2");
    CHECK(Rat().str() == "0");
}

TEST_CASE("parse_int") {
    CHECK(parse_int("42") == 42);
    CHECK(parse_int("-7") == -7);
    CHECK(parse_int("+7") == 7);
    CHECK(parse_int("123456789012345678901234567890") ==
          Int("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_int(""), ParseError);
    CHECK_THROWS_AS(parse_int("-"), ParseError);
    CHECK_THROWS_AS(parse_int("4x"), ParseError);
    CHECK_THROWS_AS(parse_int("1.5"), ParseError);
}

TEST_CASE("parse_rat") {
    CHECK(parse_rat("3/4") == Rat(Int(3), Int(4)));
    CHECK(parse_rat("-6/4") == Rat(Int(-3), Int(2)));
    CHECK(parse_rat("5") == Rat(Int(5)));
    CHECK_THROWS_AS(parse_rat("3/"), ParseError);
    CHECK_THROWS_AS(parse_rat("/4"), ParseError);
    CHECK_THROWS_AS(parse_rat("3/0"), ParseError);
}

TEST_CASE("permutation_sign") {
    CHECK(permutation_sign({0, 1, 2}) == 1);
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({2, 0, 1}) == 1);
    CHECK(permutation_sign({}) == 1);
    CHECK(permutation_sign({3, 2, 1, 0}) == 1);
}
