#pragma once

#include <functional>

#include "ppmine/ppc_tree.hpp"

namespace ppmine {

/// Intersects the N-list of a candidate's descendant side with its
/// ancestor side. Two-pointer walk over pre-order-sorted inputs: each
/// descendant code is matched to the ancestor code covering it (ancestor
/// pre smaller, post larger) and emitted with the descendant's count;
/// consecutive emissions on the same ancestor code merge by summing.
NList nl_intersect(const NList& descendant, const NList& ancestor);

/// Structural cost counters for the benchmark harness.
struct MineStats {
    std::uint64_t tree_nodes = 0;   // PPC-tree nodes including root
    std::uint64_t peak_codes = 0;   // 1-itemset codes + max live
                                    // intersection codes on any
                                    // enumeration path
};

struct MineOptions {
    /// When set, only itemsets of size >= 2 whose anchor (least frequent
    /// item) has a rank accepted by the filter are emitted, and
    /// 1-itemsets are omitted entirely. Used by group-parallel mining.
    std::function<bool(std::uint32_t anchor_rank)> anchor_filter;
    MineStats* stats = nullptr;
};

/// PrePost mining over prebuilt structures: 1-itemsets from the F-list,
/// 2-itemsets from the pair-count tree scan, and larger itemsets by
/// depth-first set enumeration with N-list intersection.
MiningResult mine(const FList& flist,
                  const std::unordered_map<Item, NList>& nlists,
                  const PairCounts& pairs, std::uint64_t m,
                  const MineOptions& options = {});

/// Full sequential PrePost: two scans, tree, N-lists, mine.
MiningResult prepost(const TransactionDatabase& db, std::uint64_t m,
                     MineStats* stats = nullptr);

}  // namespace ppmine
