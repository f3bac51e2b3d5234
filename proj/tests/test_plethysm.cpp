#include "doctest.h"

#include "schurcoh/plethysm.hpp"
#include "schurcoh/report.hpp"

using namespace schurcoh;

TEST_CASE("wedge3 weights")
{
    auto w = wedge3_weights();
    REQUIRE(w.size() == 20);
    CHECK(w.front() == Weight{1, 1, 1, 0, 0, 0});
    std::vector<int> sum(6, 0);
    for (const Weight& x : w) {
        CHECK(x.total() == 3);
        for (std::size_t i = 0; i < 6; ++i)
            sum[i] += x[i];
    }
    CHECK(sum == std::vector<int>(6, 10));
}

TEST_CASE("small wedge powers")
{
    Decomposition p0;
    p0.add(Weight{0, 0, 0, 0, 0, 0}, 1);
    CHECK(decompose_wedge_power(0) == p0);

    Decomposition p1;
    p1.add(Weight{1, 1, 1, 0, 0, 0}, 1);
    CHECK(decompose_wedge_power(1) == p1);

    Decomposition p2;
    p2.add(Weight{2, 2, 1, 1, 0, 0}, 1);
    p2.add(Weight{1, 1, 1, 1, 1, 1}, 1);
    CHECK(decompose_wedge_power(2) == p2);
    CHECK(weyl_dim(Weight{2, 2, 1, 1, 0, 0}) == 189);
}

TEST_CASE("full character is Weyl symmetric")
{
    for (int p : {2, 3, 5}) {
        auto all = wedge_power_weights(p, false);
        for (const auto& [w, k] : all) {
            std::vector<int> sorted = w.vec();
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            auto it = all.find(Weight(sorted));
            REQUIRE(it != all.end());
            CHECK(it->second == k);
        }
        std::int64_t mass = 0;
        for (const auto& [w, k] : all)
            mass += k;
        CHECK(BigInt(static_cast<long>(mass)) == binomial(20, p));
    }
}

TEST_CASE("greedy decomposition rejects non-characters")
{
    // Sym^2 needs (1,1,0,0,0,0) as well
    WeightMultiplicityMap missing{{Weight{2, 0, 0, 0, 0, 0}, 1}};
    CHECK_THROWS_AS(decompose_dominant_character(missing), std::logic_error);
    WeightMultiplicityMap excess{{Weight{2, 0, 0, 0, 0, 0}, 2}, {Weight{1, 1, 0, 0, 0, 0}, 1}};
    CHECK_THROWS_AS(decompose_dominant_character(excess), std::logic_error);
    WeightMultiplicityMap sym2{{Weight{2, 0, 0, 0, 0, 0}, 1}, {Weight{1, 1, 0, 0, 0, 0}, 1}};
    Decomposition one;
    one.add(Weight{2, 0, 0, 0, 0, 0}, 1);
    CHECK(decompose_dominant_character(sym2) == one);
}

TEST_CASE("factor table")
{
    const KoszulFactorTable& t = koszul_factor_table();
    for (int p = 0; p <= kKoszulLength; ++p) {
        CHECK(t.column(p).dimension() == binomial(20, p));
        for (const auto& [w, k] : t.column(p))
            CHECK(k == 1);
    }
    CHECK(t.column(20).multiplicity(Weight{10, 10, 10, 10, 10, 10}) == 1);
    CHECK(t.column(20).size() == 1);
    CHECK(t.column(10).size() == 20);
    CHECK(t.column(10).terms().rbegin()->first == Weight{10, 4, 4, 4, 4, 4});
}

TEST_CASE("column duality and shift identity")
{
    const KoszulFactorTable& t = koszul_factor_table();
    for (int p = 0; p <= 20; ++p) {
        Decomposition expect;
        for (const auto& [w, k] : t.column(p))
            expect.add(dual(w).shifted(10), k);
        CHECK(t.column(20 - p) == expect);
    }
    for (int k = 0; k <= 10; ++k)
        CHECK(shifted_column(t, k) == t.column(10 + k));
    // every p = 8 factor raised by 2
    for (const auto& [w, k] : t.column(8))
        CHECK(t.column(12).multiplicity(w.shifted(2)) == k);
}

TEST_CASE("columns 0..10 match the golden file")
{
    auto diff = diff_koszul(koszul_factor_table());
    CHECK(diff.unannotated_mismatches() == 0);
    CHECK(diff.count(CellStatus::mismatch) == 0);
    auto golden = koszul_golden();
    CHECK(golden.size() == 11);
    for (const auto& [p, weights] : golden)
        CHECK(weights.size() == koszul_factor_table().column(p).size());
}

TEST_CASE("parallel enumeration agrees")
{
    CHECK(decompose_wedge_power(7, 3) == decompose_wedge_power(7, 1));
}
