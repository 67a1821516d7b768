#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acr/rational.hpp"

using namespace acr;

TEST_CASE("rationals are canonical after construction and arithmetic") {
    Rat q = rat(2, 4);
    CHECK(q.get_num() == 1);
    CHECK(q.get_den() == 2);
    CHECK(is_canonical(q));

    Rat r = rat(-3, -6);
    CHECK(r == rat(1, 2));
    CHECK(is_canonical(r));

    Rat s = rat(1, 3) + rat(1, 6);
    CHECK(s == rat(1, 2));
    CHECK(is_canonical(s));

    Rat t = rat(1, 2) * rat(2, 3) - rat(1, 3);
    CHECK(t == 0);
    CHECK(t.get_den() == 1);
    CHECK(is_canonical(t));

    CHECK_THROWS(rat(1, 0));
}

TEST_CASE("the proof weights are exactly representable") {
    CHECK(rat(-3, 6) == rat(-1, 2));
    CHECK(rat(2, 6) == rat(1, 3));
    CHECK(rat(1, 6) + rat(-3, 6) + rat(2, 6) == 0);
}

TEST_CASE("binomials") {
    CHECK(binomial(3, 3) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(200, 3) == 1313400);
    CHECK(binomial(1, 3) == 0);
    CHECK(binomial(0, 2) == 0);
    CHECK_THROWS(binomial(Int(-1), 2));
}

TEST_CASE("rational text round-trip") {
    for (const char* s : {"0", "7", "-3", "1/2", "-13/7", "1313400"}) {
        Rat q = rat_parse(s);
        CHECK(rat_str(q) == s);
    }
    CHECK(rat_str(rat(4, 8)) == "1/2");
    CHECK_THROWS(rat_parse("one half"));
}
