#include <doctest.h>

#include "wlab/rational.hpp"

using namespace wlab;

TEST_CASE("rationals are canonical") {
    BigRat q = make_rat(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(rat_to_string(q) == "-3/2");
    CHECK(make_rat(0, 7) == 0);
    CHECK_THROWS(make_rat(1, 0));
}

TEST_CASE("string round trip") {
    CHECK(rat_from_string("-3/2") == make_rat(-3, 2));
    CHECK(rat_from_string("5") == 5);
    CHECK(rat_to_string(rat_from_string("4/6")) == "2/3");
    CHECK_THROWS(rat_from_string("x"));
}

TEST_CASE("integer extraction") {
    CHECK(is_integer(make_rat(8, 4)));
    CHECK(to_integer(make_rat(8, 4)) == 2);
    CHECK_FALSE(is_integer(make_rat(1, 2)));
    CHECK_THROWS(to_integer(make_rat(1, 2)));
}

TEST_CASE("powers stay exact") {
    CHECK(big_pow(BigInt(96), 7).get_str() == "75144747810816");  // beyond 2^46
    CHECK(rat_pow(make_rat(3, 2), 3) == make_rat(27, 8));
    CHECK(big_pow(BigInt(2), 0) == 1);
}
