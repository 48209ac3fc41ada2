#include <doctest.h>

#include "fixtures.hpp"
#include "ppmine/baselines.hpp"
#include "ppmine/io.hpp"
#include "ppmine/nlist_miner.hpp"

using namespace ppmine;
using namespace fixtures;

namespace {

struct WorkedExample {
    TransactionDatabase db = table1();
    FList flist = build_flist(db, 3);
    PPCTree tree = build_ppc_tree(db, flist);
    std::unordered_map<Item, NList> nlists = tree.build_nlists();
    PairCounts pairs = tree.count_pairs();
};

}  // namespace

TEST_CASE("nl_intersect reproduces the published (be) merge") {
    WorkedExample ex;
    auto be = nl_intersect(ex.nlists.at(e), ex.nlists.at(b));
    CHECK(be == NList{{{1, 5, 2}}});
    CHECK(support(be) == 2);
}

TEST_CASE("nl_intersect of e and d finds the single shared path") {
    WorkedExample ex;
    // Only {a, d, e} contains both.
    CHECK(direct_support(ex.db, {d, e}) == 1);
    auto de = nl_intersect(ex.nlists.at(e), ex.nlists.at(d));
    CHECK(de == NList{{{8, 7, 1}}});
}

TEST_CASE("nl_intersect with an empty side is empty") {
    WorkedExample ex;
    NList empty;
    CHECK(nl_intersect(ex.nlists.at(e), empty).codes.empty());
    CHECK(nl_intersect(empty, ex.nlists.at(b)).codes.empty());
}

TEST_CASE("nl_intersect rejects unsorted input") {
    NList bad{{{5, 1, 1}, {2, 4, 1}}};
    NList ok{{{1, 9, 1}}};
    CHECK_THROWS_AS(nl_intersect(bad, ok), std::logic_error);
    CHECK_THROWS_AS(nl_intersect(ok, bad), std::logic_error);
}

TEST_CASE("support sums code counts") {
    CHECK(support(NList{{{2, 1, 2}, {7, 8, 2}}}) == 4);
    CHECK(support(NList{{{1, 5, 2}}}) == 2);
    CHECK(support(NList{}) == 0);
}

TEST_CASE("mine on the worked example, m=3") {
    WorkedExample ex;
    auto result = mine(ex.flist, ex.nlists, ex.pairs, 3);

    MiningResult expected;
    expected.add({a}, 4);
    expected.add({b}, 5);
    expected.add({c}, 3);
    expected.add({d}, 3);
    expected.add({e}, 3);
    expected.add({b, c}, 3);
    CHECK(!first_difference(result, expected));
}

TEST_CASE("mine at m=1 finds the deep itemsets") {
    auto db = table1();
    auto result = prepost(db, 1);
    CHECK(result.support_of({a, b, e}) == 1);
    CHECK(result.support_of({a, d, e}) == 1);
    CHECK(!first_difference(result, brute_force(db, 1)));
}

TEST_CASE("mine with an empty F-list yields an empty result") {
    FList flist;
    CHECK(mine(flist, {}, {}, 1).empty());
    CHECK(prepost(TransactionDatabase{}, 1).empty());
}

TEST_CASE("intersection properties on random databases") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto db = generate(9, 30, 4, seed);
        auto flist = build_flist(db, 2);
        auto tree = build_ppc_tree(db, flist);
        auto nlists = tree.build_nlists();
        auto pairs = tree.count_pairs();

        for (std::uint32_t i = 0; i < flist.size(); ++i) {
            for (std::uint32_t j = 0; j < i; ++j) {
                const auto& anc = nlists.at(flist.entry(j).item);
                const auto& desc = nlists.at(flist.entry(i).item);
                auto nl = nl_intersect(desc, anc);

                CHECK(support(nl) <= std::min(support(desc), support(anc)));
                for (std::size_t k = 0; k < nl.codes.size(); ++k) {
                    if (k) CHECK(nl.codes[k - 1].pre < nl.codes[k].pre);
                    // Output coordinates come from the ancestor input.
                    bool found = false;
                    for (const auto& code : anc.codes)
                        found |= code.pre == nl.codes[k].pre &&
                                 code.post == nl.codes[k].post;
                    CHECK(found);
                }

                // The tree scan and the intersection are two routes to
                // the same 2-itemset support.
                auto it = pairs.find({flist.entry(j).item, flist.entry(i).item});
                std::uint64_t scanned = it == pairs.end() ? 0 : it->second;
                CHECK(support(nl) == scanned);
            }
        }
    }
}

TEST_CASE("mine equals the brute-force oracle on random databases") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto db = generate(12, 40, 4, seed);
        for (std::uint64_t m : {2, 4, 8}) {
            auto result = prepost(db, m);
            auto expected = brute_force(db, m);
            auto diff = first_difference(result, expected);
            INFO("seed ", seed, " m ", m, " diff ",
                 diff ? diff->describe() : "none");
            CHECK(!diff);

            // Downward closure: drop one item, support never shrinks.
            for (const auto& [itemset, sup] : result.entries()) {
                if (itemset.size() < 2) continue;
                for (std::size_t drop = 0; drop < itemset.size(); ++drop) {
                    Itemset sub;
                    for (std::size_t i = 0; i < itemset.size(); ++i)
                        if (i != drop) sub.push_back(itemset[i]);
                    auto parent = result.support_of(sub);
                    REQUIRE(parent);
                    CHECK(*parent >= sup);
                }
            }
        }
    }
}

TEST_CASE("mine is deterministic") {
    auto db = generate(10, 30, 4, 17);
    auto first = prepost(db, 2);
    auto second = prepost(db, 2);
    CHECK(!first_difference(first, second));
}
