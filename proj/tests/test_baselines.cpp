#include <doctest.h>

#include "fixtures.hpp"
#include "ppmine/baselines.hpp"
#include "ppmine/io.hpp"
#include "ppmine/nlist_miner.hpp"

using namespace ppmine;
using namespace fixtures;

TEST_CASE("brute_force on the worked example, spot-checked by hand") {
    auto db = table1();
    auto result = brute_force(db, 3);
    REQUIRE(result.size() == 6);
    CHECK(result.support_of({b}) == 5);
    CHECK(result.support_of({a}) == 4);
    CHECK(result.support_of({b, c}) == 3);  // T2, T5, T7
    CHECK(!result.support_of({b, e}));      // only T3, T5

    CHECK(brute_force(db, 8).empty());  // m > n

    TransactionDatabase tiny;
    tiny.transactions.push_back({1, 2});
    auto small = brute_force(tiny, 1);
    REQUIRE(small.size() == 3);
    CHECK(small.support_of({1}) == 1);
    CHECK(small.support_of({2}) == 1);
    CHECK(small.support_of({1, 2}) == 1);
}

TEST_CASE("brute_force enforces its caps") {
    TransactionDatabase wide;
    Transaction t;
    for (Item i = 1; i <= 17; ++i) t.push_back(i);
    wide.transactions.push_back(t);
    CHECK_THROWS_AS(brute_force(wide, 1), std::invalid_argument);

    TransactionDatabase tall;
    for (int i = 0; i < 65; ++i) tall.transactions.push_back({1});
    CHECK_THROWS_AS(brute_force(tall, 1), std::invalid_argument);
}

TEST_CASE("fp_growth matches the oracle on the worked example") {
    auto db = table1();
    CHECK(!first_difference(fp_growth(db, 3), brute_force(db, 3)));
    CHECK(!first_difference(fp_growth(db, 1), brute_force(db, 1)));
    CHECK(fp_growth(TransactionDatabase{}, 1).empty());
}

TEST_CASE("fp_growth matches the oracle and prepost on random databases") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto db = generate(11, 35, 4, seed);
        for (std::uint64_t m : {2, 5, 9}) {
            auto oracle = brute_force(db, m);
            auto fp = fp_growth(db, m);
            auto diff = first_difference(fp, oracle);
            INFO("seed ", seed, " m ", m, " diff ",
                 diff ? diff->describe() : "none");
            CHECK(!diff);
            CHECK(!first_difference(prepost(db, m), oracle));
        }
    }
}

TEST_CASE("fp_growth reports live tree nodes") {
    auto db = table1();
    std::uint64_t peak = 0;
    fp_growth(db, 3, &peak);
    CHECK(peak >= 10);  // at least the initial tree
}
