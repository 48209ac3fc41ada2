#include "ppmine/baselines.hpp"

#include <algorithm>

#include "ppmine/ppc_tree.hpp"

namespace ppmine {

MiningResult brute_force(const TransactionDatabase& db, std::uint64_t m) {
    std::vector<Item> universe;
    for (const auto& t : db.transactions)
        universe.insert(universe.end(), t.begin(), t.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    if (universe.size() > OracleConfig::kMaxItems)
        throw std::invalid_argument("brute_force: too many distinct items");
    if (db.size() > OracleConfig::kMaxTransactions)
        throw std::invalid_argument("brute_force: too many transactions");

    std::unordered_map<Item, std::uint32_t> bit_of;
    for (std::uint32_t b = 0; b < universe.size(); ++b) bit_of[universe[b]] = b;

    std::vector<std::uint32_t> masks;
    masks.reserve(db.size());
    for (const auto& t : db.transactions) {
        std::uint32_t mask = 0;
        for (Item item : t) mask |= 1u << bit_of[item];
        masks.push_back(mask);
    }

    MiningResult result;
    const std::uint32_t all = universe.size() == 32 ? ~0u : (1u << universe.size()) - 1;
    for (std::uint32_t subset = 1; subset <= all && all != 0; ++subset) {
        std::uint64_t count = 0;
        for (std::uint32_t mask : masks)
            if ((mask & subset) == subset) ++count;
        if (count < m) continue;
        Itemset itemset;
        for (std::uint32_t b = 0; b < universe.size(); ++b)
            if (subset & (1u << b)) itemset.push_back(universe[b]);
        result.add(std::move(itemset), count);
    }
    return result;
}

namespace {

// Header entries stay in global F-list order; conditional trees reuse
// that order, so every path is inserted consistently.
struct FPTree {
    struct Node {
        Item item = 0;
        std::uint64_t count = 0;
        std::int32_t parent = -1;
        std::int32_t next = -1;  // next node with the same item
        std::vector<std::int32_t> children;
    };
    struct HeaderEntry {
        Item item;
        std::uint64_t count = 0;
        std::int32_t head = -1;
    };

    std::vector<Node> nodes{Node{}};  // nodes[0] is the root
    std::vector<HeaderEntry> header;
    std::unordered_map<Item, std::size_t> header_index;

    void add_header(Item item) {
        header_index.emplace(item, header.size());
        header.push_back({item});
    }

    void insert(std::span<const Item> path, std::uint64_t count) {
        std::int32_t cur = 0;
        for (Item item : path) {
            std::int32_t next = -1;
            for (std::int32_t child : nodes[cur].children)
                if (nodes[child].item == item) {
                    next = child;
                    break;
                }
            if (next < 0) {
                next = static_cast<std::int32_t>(nodes.size());
                Node node;
                node.item = item;
                node.parent = cur;
                auto& h = header[header_index.at(item)];
                node.next = h.head;
                h.head = next;
                nodes.push_back(std::move(node));
                nodes[cur].children.push_back(next);
            }
            nodes[next].count += count;
            header[header_index.at(item)].count += count;
            cur = next;
        }
    }
};

struct FPMiner {
    std::uint64_t m;
    MiningResult& result;
    std::uint64_t live_nodes = 0;
    std::uint64_t peak_nodes = 0;

    void mine_tree(const FPTree& tree, std::vector<Item>& suffix) {
        // Least frequent first, so each conditional base only contains
        // items earlier in the header.
        for (auto it = tree.header.rbegin(); it != tree.header.rend(); ++it) {
            if (it->count < m) continue;

            suffix.push_back(it->item);
            Itemset itemset(suffix);
            std::sort(itemset.begin(), itemset.end());
            result.add(std::move(itemset), it->count);

            // Conditional pattern base: root paths above each item node.
            std::vector<std::pair<std::vector<Item>, std::uint64_t>> base;
            std::unordered_map<Item, std::uint64_t> cond_counts;
            for (std::int32_t n = it->head; n >= 0; n = tree.nodes[n].next) {
                std::vector<Item> path;
                for (std::int32_t p = tree.nodes[n].parent; p > 0; p = tree.nodes[p].parent)
                    path.push_back(tree.nodes[p].item);
                std::reverse(path.begin(), path.end());
                if (path.empty()) continue;
                for (Item item : path) cond_counts[item] += tree.nodes[n].count;
                base.emplace_back(std::move(path), tree.nodes[n].count);
            }

            bool any_frequent = false;
            for (const auto& [item, count] : cond_counts)
                any_frequent |= count >= m;
            if (any_frequent) {
                FPTree cond;
                for (const auto& h : tree.header)
                    if (auto c = cond_counts.find(h.item);
                        c != cond_counts.end() && c->second >= m)
                        cond.add_header(h.item);
                for (const auto& [path, count] : base) {
                    std::vector<Item> filtered;
                    for (Item item : path)
                        if (cond.header_index.contains(item)) filtered.push_back(item);
                    if (!filtered.empty()) cond.insert(filtered, count);
                }

                live_nodes += cond.nodes.size();
                peak_nodes = std::max(peak_nodes, live_nodes);
                mine_tree(cond, suffix);
                live_nodes -= cond.nodes.size();
            }
            suffix.pop_back();
        }
    }
};

}  // namespace

MiningResult fp_growth(const TransactionDatabase& db, std::uint64_t m,
                       std::uint64_t* peak_nodes) {
    FList flist = build_flist(db, m);

    FPTree tree;
    for (const auto& e : flist.entries()) tree.add_header(e.item);
    for (const auto& t : db.transactions) {
        auto projected = project_transaction(t, flist);
        if (!projected.empty()) tree.insert(projected, 1);
    }

    MiningResult result;
    FPMiner miner{m, result};
    miner.live_nodes = tree.nodes.size();
    miner.peak_nodes = miner.live_nodes;
    std::vector<Item> suffix;
    miner.mine_tree(tree, suffix);

    if (peak_nodes) *peak_nodes = miner.peak_nodes;
    return result;
}

}  // namespace ppmine
