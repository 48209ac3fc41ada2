#include "ppmine/ppc_tree.hpp"

#include <algorithm>
#include <ostream>

namespace ppmine {

std::uint64_t support(const NList& nl) {
    std::uint64_t sum = 0;
    for (const auto& code : nl.codes) sum += code.count;
    return sum;
}

FList build_flist(const TransactionDatabase& db, std::uint64_t m) {
    std::unordered_map<Item, std::uint64_t> counts;
    for (const auto& t : db.transactions)
        for (Item item : t) ++counts[item];

    std::vector<FListEntry> entries;
    for (const auto& [item, count] : counts)
        if (count >= m) entries.push_back({item, count, 0});
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.item < b.item;
    });
    return FList(std::move(entries));
}

ProjectedTransaction project_transaction(const Transaction& t, const FList& flist) {
    std::vector<std::uint32_t> ranks;
    for (Item item : t)
        if (auto r = flist.rank_of(item)) ranks.push_back(*r);
    std::sort(ranks.begin(), ranks.end());

    ProjectedTransaction out;
    out.reserve(ranks.size());
    for (auto r : ranks) out.push_back(flist.entry(r).item);
    return out;
}

PPCTree::PPCTree(const FList& flist) : flist_(flist) {
    nodes_.emplace_back();  // root, labeled null
}

void PPCTree::insert(const ProjectedTransaction& path) {
    if (path.empty()) return;

    std::uint32_t prev_rank = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        auto r = flist_.rank_of(path[i]);
        if (!r || (i > 0 && *r <= prev_rank))
            throw std::logic_error("insert: path not in strictly increasing rank order");
        prev_rank = *r;
    }

    std::int32_t cur = 0;
    nodes_[0].count += 1;
    for (Item item : path) {
        std::int32_t next = -1;
        for (std::int32_t child : nodes_[cur].children) {
            if (nodes_[child].item == item) {
                next = child;
                break;
            }
        }
        if (next < 0) {
            next = static_cast<std::int32_t>(nodes_.size());
            Node node;
            node.item = item;
            node.parent = cur;
            nodes_.push_back(std::move(node));
            nodes_[cur].children.push_back(next);
        }
        nodes_[next].count += 1;
        cur = next;
    }
    ordered_ = false;
}

void PPCTree::assign_orders() {
    std::uint32_t pre = 0, post = 0;
    // Explicit stack; frame.next tracks which child to descend into.
    struct Frame {
        std::int32_t node;
        std::size_t next;
    };
    std::vector<Frame> stack{{0, 0}};
    nodes_[0].pre = pre++;
    while (!stack.empty()) {
        Frame& top = stack.back();
        auto& node = nodes_[top.node];
        if (top.next < node.children.size()) {
            std::int32_t child = node.children[top.next++];
            nodes_[child].pre = pre++;
            stack.push_back({child, 0});
        } else {
            node.post = post++;
            stack.pop_back();
        }
    }
    ordered_ = true;
}

std::unordered_map<Item, NList> PPCTree::build_nlists() const {
    if (!ordered_) throw std::logic_error("build_nlists: assign_orders not run");
    std::unordered_map<Item, NList> nlists;
    for (const auto& e : flist_.entries()) nlists[e.item];  // every item present

    // Nodes are stored in insertion order, not pre-order; traverse.
    std::vector<std::int32_t> stack;
    for (auto it = nodes_[0].children.rbegin(); it != nodes_[0].children.rend(); ++it)
        stack.push_back(*it);
    while (!stack.empty()) {
        std::int32_t idx = stack.back();
        stack.pop_back();
        const Node& node = nodes_[idx];
        nlists[node.item].codes.push_back({node.pre, node.post, node.count});
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
            stack.push_back(*it);
    }
    return nlists;
}

PairCounts PPCTree::count_pairs() const {
    PairCounts pairs;
    // DFS with the ancestor item stack carried explicitly.
    struct Frame {
        std::int32_t node;
        std::size_t next;
    };
    std::vector<Frame> stack{{0, 0}};
    std::vector<Item> ancestors;
    while (!stack.empty()) {
        Frame& top = stack.back();
        const Node& node = nodes_[top.node];
        if (top.next < node.children.size()) {
            std::int32_t child = node.children[top.next++];
            const Node& c = nodes_[child];
            // Ranks strictly increase along any path, so ancestor items
            // always carry the lower rank.
            for (Item anc : ancestors)
                pairs[{anc, c.item}] += c.count;
            ancestors.push_back(c.item);
            stack.push_back({child, 0});
        } else {
            if (top.node != 0) ancestors.pop_back();
            stack.pop_back();
        }
    }
    return pairs;
}

void PPCTree::dump(std::ostream& os) const {
    struct Frame {
        std::int32_t node;
        std::size_t next;
        int depth;
    };
    std::vector<Frame> stack{{0, 0, 0}};
    auto line = [&](const Node& n, int depth) {
        os << depth << ' ';
        if (n.parent < 0)
            os << '-';
        else
            os << n.item;
        os << ' ' << n.count << ' ' << n.pre << ' ' << n.post << '\n';
    };
    line(nodes_[0], 0);
    while (!stack.empty()) {
        Frame& top = stack.back();
        const Node& node = nodes_[top.node];
        if (top.next < node.children.size()) {
            std::int32_t child = node.children[top.next++];
            line(nodes_[child], top.depth + 1);
            stack.push_back({child, 0, top.depth + 1});
        } else {
            stack.pop_back();
        }
    }
}

PPCTree build_ppc_tree(const TransactionDatabase& db, const FList& flist) {
    PPCTree tree(flist);
    for (const auto& t : db.transactions)
        tree.insert(project_transaction(t, flist));
    tree.assign_orders();
    return tree;
}

}  // namespace ppmine
