#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "ppmine/baselines.hpp"
#include "ppmine/io.hpp"

using namespace ppmine;

TEST_CASE("parse_fimi splits on whitespace runs and deduplicates") {
    std::istringstream in("2 1\n2 3 4\n");
    auto db = parse_fimi(in);
    REQUIRE(db.size() == 2);
    CHECK(db.transactions[0] == Transaction{1, 2});
    CHECK(db.transactions[1] == Transaction{2, 3, 4});

    std::istringstream messy("  7\t7  2 \r\n\n\t\n10\r\n");
    auto db2 = parse_fimi(messy);
    REQUIRE(db2.size() == 2);
    CHECK(db2.transactions[0] == Transaction{2, 7});
    CHECK(db2.transactions[1] == Transaction{10});

    std::istringstream empty("");
    CHECK(parse_fimi(empty).empty());
}

TEST_CASE("parse_fimi reports bad tokens with line numbers") {
    std::istringstream bad("1 2\n3 x4\n");
    try {
        parse_fimi(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        CHECK(err.line() == 2);
    }

    std::istringstream overflow("4294967296\n");  // 2^32
    try {
        parse_fimi(overflow);
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        CHECK(err.line() == 1);
    }
    std::istringstream max_ok("4294967295\n");
    CHECK(parse_fimi(max_ok).transactions[0] == Transaction{4294967295u});
}

TEST_CASE("dataset_stats on the worked example") {
    auto s = dataset_stats(fixtures::table1());
    CHECK(s.items == 7);
    CHECK(s.transactions == 7);
    CHECK(s.avg_length == doctest::Approx(22.0 / 7.0));  // 22 occurrences by hand

    auto none = dataset_stats(TransactionDatabase{});
    CHECK(none.items == 0);
    CHECK(none.transactions == 0);
    CHECK(none.avg_length == 0.0);
}

TEST_CASE("write_result is canonical: size-major, lexicographic, tab support") {
    MiningResult r;
    r.add({2, 3}, 3);
    std::ostringstream pair_only;
    write_result(r, pair_only);
    CHECK(pair_only.str() == "2 3\t3\n");

    auto oracle = brute_force(fixtures::table1(), 3);
    std::ostringstream os;
    write_result(oracle, os);
    CHECK(os.str() ==
          "1\t4\n"
          "2\t5\n"
          "3\t3\n"
          "4\t3\n"
          "5\t3\n"
          "2 3\t3\n");

    std::ostringstream empty;
    write_result(MiningResult{}, empty);
    CHECK(empty.str().empty());
}

TEST_CASE("fimi round-trip: parse(write(db)) == db") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto db = generate(12, 25, 4, seed);
        std::ostringstream os;
        write_fimi(db, os);
        std::istringstream in(os.str());
        auto back = parse_fimi(in);
        CHECK(back.transactions == db.transactions);
    }
}

TEST_CASE("generate is seed-deterministic and tracks its parameters") {
    auto first = generate(10, 30, 4, 1);
    auto second = generate(10, 30, 4, 1);
    CHECK(first.transactions == second.transactions);

    auto other = generate(10, 30, 4, 2);
    CHECK(first.transactions != other.transactions);

    auto s = dataset_stats(generate(5, 100, 3, 7));
    CHECK(s.items <= 5);
    CHECK(s.transactions == 100);
    CHECK(std::abs(s.avg_length - 3.0) <= 1.0);

    CHECK_THROWS_AS(generate(5, 10, 9, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate(0, 10, 1, 1), std::invalid_argument);
}
