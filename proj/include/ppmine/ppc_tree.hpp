#pragma once

#include <iosfwd>
#include <map>
#include <utility>

#include "ppmine/core.hpp"

namespace ppmine {

/// (pre-order, post-order) : count — identifies one tree node and the
/// number of transaction paths running through it.
struct PPCode {
    std::uint32_t pre;
    std::uint32_t post;
    std::uint64_t count;

    bool operator==(const PPCode&) const = default;
};

/// True iff the node coded by `u` is a proper ancestor of the node coded
/// by `v` (u.pre < v.pre and u.post > v.post). Codes must come from the
/// same numbered tree.
inline bool is_ancestor(const PPCode& u, const PPCode& v) {
    return u.pre < v.pre && u.post > v.post;
}

/// PP-codes of one itemset, strictly ascending by pre-order.
struct NList {
    std::vector<PPCode> codes;

    bool operator==(const NList&) const = default;
};

/// Sum of code counts — the itemset's support.
std::uint64_t support(const NList& nl);

/// A projected transaction: frequent items only, sorted by F-list rank
/// ascending (most frequent first).
using ProjectedTransaction = std::vector<Item>;

/// First database scan: items with support >= m, sorted by count
/// descending with ties broken by ascending item id.
FList build_flist(const TransactionDatabase& db, std::uint64_t m);

/// Drops infrequent items and sorts the rest by F-list rank. May be empty.
ProjectedTransaction project_transaction(const Transaction& t, const FList& flist);

/// Support count per frequent item pair, keyed (lower-rank item,
/// higher-rank item). Only pairs that co-occur at least once appear.
using PairCounts = std::map<std::pair<Item, Item>, std::uint64_t>;

/// Prefix tree over F-list-ordered transactions. Each node carries item,
/// count, children, pre-order and post-order; the root is item-less.
class PPCTree {
  public:
    struct Node {
        Item item = 0;  // meaningless at the root
        std::uint64_t count = 0;
        std::int32_t parent = -1;
        std::vector<std::int32_t> children;  // first-insertion order
        std::uint32_t pre = 0;
        std::uint32_t post = 0;
    };

    explicit PPCTree(const FList& flist);

    /// Walks from the root reusing matching children (count += 1) and
    /// appending new ones (count = 1). Empty paths are no-ops. Paths must
    /// be in strictly increasing rank order.
    void insert(const ProjectedTransaction& path);

    /// Pre-order and post-order DFS numbering, root included, both
    /// starting at 0. Children are visited in children-list order.
    void assign_orders();

    /// One N-list per F-list item, codes in ascending pre-order.
    /// Requires assign_orders.
    std::unordered_map<Item, NList> build_nlists() const;

    /// Tree scan for 2-itemset supports: each node's count is charged to
    /// every (ancestor item, node item) pair on its root path.
    PairCounts count_pairs() const;

    std::size_t node_count() const { return nodes_.size(); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& root() const { return nodes_[0]; }
    const FList& flist() const { return flist_; }

    /// One line per node in pre-order: `depth item count pre post`
    /// (the root prints item `-`).
    void dump(std::ostream& os) const;

  private:
    FList flist_;
    std::vector<Node> nodes_;  // nodes_[0] is the root
    bool ordered_ = false;
};

/// Both scans in one call: project every transaction, insert, number.
PPCTree build_ppc_tree(const TransactionDatabase& db, const FList& flist);

}  // namespace ppmine
