#include "ppmine/nlist_miner.hpp"

#include <algorithm>

namespace ppmine {

NList nl_intersect(const NList& descendant, const NList& ancestor) {
    auto check_sorted = [](const NList& nl) {
        for (std::size_t i = 1; i < nl.codes.size(); ++i)
            if (nl.codes[i - 1].pre >= nl.codes[i].pre)
                throw std::logic_error("nl_intersect: input not ascending by pre");
    };
    check_sorted(descendant);
    check_sorted(ancestor);

    NList out;
    std::size_t d = 0, a = 0;
    while (d < descendant.codes.size() && a < ancestor.codes.size()) {
        const PPCode& dc = descendant.codes[d];
        const PPCode& ac = ancestor.codes[a];
        if (is_ancestor(ac, dc)) {
            if (!out.codes.empty() && out.codes.back().pre == ac.pre &&
                out.codes.back().post == ac.post) {
                out.codes.back().count += dc.count;
            } else {
                out.codes.push_back({ac.pre, ac.post, dc.count});
            }
            ++d;
        } else if (ac.pre < dc.pre) {
            ++a;
        } else {
            ++d;
        }
    }
    return out;
}

namespace {

struct EnumNode {
    Item tail;
    std::uint32_t tail_rank;
    NList nl;
    std::uint64_t support;
};

struct Miner {
    const FList& flist;
    std::uint64_t m;
    MiningResult& result;
    std::uint64_t live_codes = 0;
    std::uint64_t peak_codes = 0;

    void emit(const std::vector<Item>& mining_order, std::uint64_t sup) {
        Itemset itemset(mining_order);
        std::sort(itemset.begin(), itemset.end());
        result.add(std::move(itemset), sup);
    }

    // `prefix` is in mining order (rank descending); `siblings` all extend
    // it by one item and are sorted by tail rank descending, so joining a
    // node with any later sibling adds a strictly more frequent item.
    void expand(std::vector<Item>& prefix, const std::vector<EnumNode>& siblings) {
        for (std::size_t i = 0; i + 1 < siblings.size(); ++i) {
            std::vector<EnumNode> children;
            prefix.push_back(siblings[i].tail);
            for (std::size_t j = i + 1; j < siblings.size(); ++j) {
                NList nl = nl_intersect(siblings[i].nl, siblings[j].nl);
                std::uint64_t sup = support(nl);
                if (sup < m) continue;
                prefix.push_back(siblings[j].tail);
                emit(prefix, sup);
                prefix.pop_back();
                children.push_back({siblings[j].tail, siblings[j].tail_rank,
                                    std::move(nl), sup});
            }
            if (children.size() > 1) {
                for (const auto& c : children) live_codes += c.nl.codes.size();
                peak_codes = std::max(peak_codes, live_codes);
                expand(prefix, children);
                for (const auto& c : children) live_codes -= c.nl.codes.size();
            }
            prefix.pop_back();
        }
    }
};

}  // namespace

MiningResult mine(const FList& flist,
                  const std::unordered_map<Item, NList>& nlists,
                  const PairCounts& pairs, std::uint64_t m,
                  const MineOptions& options) {
    MiningResult result;
    const bool grouped = static_cast<bool>(options.anchor_filter);

    if (!grouped)
        for (const auto& e : flist.entries())
            result.add({e.item}, e.count);

    std::uint64_t base_codes = 0;
    for (const auto& [item, nl] : nlists) base_codes += nl.codes.size();

    Miner miner{flist, m, result};
    for (std::uint32_t ar = 0; ar < flist.size(); ++ar) {
        if (grouped && !options.anchor_filter(ar)) continue;
        const Item anchor = flist.entry(ar).item;
        const NList& anchor_nl = nlists.at(anchor);

        // Seed 2-itemsets from the tree-scan pair counts; the anchor is
        // the less frequent side, so the partner's N-list is the
        // ancestor input.
        std::vector<EnumNode> siblings;
        for (std::uint32_t xr = ar; xr-- > 0;) {
            const Item x = flist.entry(xr).item;
            auto it = pairs.find({x, anchor});
            if (it == pairs.end() || it->second < m) continue;
            NList nl = nl_intersect(anchor_nl, nlists.at(x));
            siblings.push_back({x, xr, std::move(nl), it->second});
        }
        for (const auto& s : siblings) {
            Itemset pair{anchor, s.tail};
            std::sort(pair.begin(), pair.end());
            result.add(std::move(pair), s.support);
        }
        if (siblings.size() > 1) {
            for (const auto& s : siblings) miner.live_codes += s.nl.codes.size();
            miner.peak_codes = std::max(miner.peak_codes, miner.live_codes);
            std::vector<Item> prefix{anchor};
            miner.expand(prefix, siblings);
            for (const auto& s : siblings) miner.live_codes -= s.nl.codes.size();
        }
    }

    if (options.stats) {
        options.stats->peak_codes = base_codes + miner.peak_codes;
    }
    return result;
}

MiningResult prepost(const TransactionDatabase& db, std::uint64_t m,
                     MineStats* stats) {
    FList flist = build_flist(db, m);
    PPCTree tree = build_ppc_tree(db, flist);
    auto nlists = tree.build_nlists();
    auto pairs = tree.count_pairs();

    MineOptions options;
    options.stats = stats;
    MiningResult result = mine(flist, nlists, pairs, m, options);
    if (stats) stats->tree_nodes = tree.node_count();
    return result;
}

}  // namespace ppmine
