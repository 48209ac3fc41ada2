#pragma once

#include "ppmine/core.hpp"

// The seven-transaction worked-example database used across the test
// suites, with letters mapped a=1, b=2, c=3, d=4, e=5, f=6, g=7.
namespace fixtures {

constexpr ppmine::Item a = 1, b = 2, c = 3, d = 4, e = 5, f = 6, g = 7;

inline ppmine::TransactionDatabase table1() {
    ppmine::TransactionDatabase db;
    for (auto items : {std::vector<ppmine::Item>{a, b, g},
                       {b, c, d, f, g},
                       {a, b, e},
                       {a, d},
                       {b, c, e},
                       {a, d, e, f},
                       {b, c}})
        db.transactions.push_back(ppmine::make_transaction(std::move(items)));
    return db;
}

// Independent co-occurrence oracle: counts transactions containing every
// item of `itemset` by direct scan. No tree or N-list machinery.
inline std::uint64_t direct_support(const ppmine::TransactionDatabase& db,
                                    const ppmine::Itemset& itemset) {
    std::uint64_t count = 0;
    for (const auto& t : db.transactions) {
        bool all = true;
        for (auto item : itemset)
            all = all && std::find(t.begin(), t.end(), item) != t.end();
        if (all) ++count;
    }
    return count;
}

}  // namespace fixtures
