#include "doctest.h"
#include "oracles.hpp"

#include "schurcoh/bwb.hpp"

#include <random>

using namespace schurcoh;

TEST_CASE("bott examples")
{
    auto a = bott(Weight{2, 2, 0, 0}, Weight{4, 4, 2, 2, 2, 1});
    REQUIRE(a);
    CHECK(a->degree == 4);
    CHECK(a->gl10_weight == Weight{2, 2, 2, 2, 2, 2, 2, 2, 2, 1});
    CHECK(a->dim == 10);

    auto b = bott(Weight{0, 0, 0, 0}, Weight{7, 7, 7, 3, 3, 3});
    REQUIRE(b);
    CHECK(b->degree == 12);
    CHECK(b->dim == 1);

    CHECK_FALSE(bott(Weight{0, 0, 0, 0}, Weight{1, 1, 1, 0, 0, 0}));

    auto d = bott(Weight{1, 0, 0, 0}, Weight{0, 0, 0, 0, 0, 0});
    REQUIRE(d);
    CHECK(d->degree == 0);
    CHECK(d->gl10_weight == Weight{1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(d->dim == 10);

    auto e = bott(Weight{0, 0, 0, 0}, Weight{10, 10, 10, 10, 10, 10});
    REQUIRE(e);
    CHECK(e->degree == 24);
    CHECK(e->dim == 1);
}

TEST_CASE("bott input validation")
{
    CHECK_THROWS_AS(bott(Weight{0, 1, 0, 0}, Weight{0, 0, 0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(bott(Weight{0, 0, 0}, Weight{0, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("dominant concatenation sits in degree 0")
{
    auto r = bott(Weight{5, 4, 4, 2}, Weight{2, 1, 1, 0, -3, -3});
    REQUIRE(r);
    CHECK(r->degree == 0);
    CHECK(r->gl10_weight == Weight{5, 4, 4, 2, 2, 1, 1, 0, -3, -3});
}

TEST_CASE("bott agrees with the reflection algorithm")
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> step(0, 3);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<int> l(4), m(6);
        int v = 8;
        for (int& x : l)
            x = (v -= step(rng));
        v = 12;
        for (int& x : m)
            x = (v -= step(rng));
        auto mine = bott(Weight(l), Weight(m));
        auto ref = oracle::bott_by_reflections(Weight(l), Weight(m));
        REQUIRE(mine.has_value() == ref.has_value());
        if (!ref)
            continue;
        CHECK(mine->degree == ref->degree);
        CHECK(mine->gl10_weight == Weight(ref->weight));
        CHECK(mine->dim == oracle::weyl_product(ref->weight));
    }
}
