#pragma once

#include "ppmine/mapreduce.hpp"
#include "ppmine/nlist_miner.hpp"

namespace ppmine {

/// Round-robin assignment of F-list ranks to mining groups.
struct GroupAssignment {
    std::uint32_t groups = 1;

    std::uint32_t group_of_rank(std::uint32_t rank) const { return rank % groups; }
};

struct HprepostConfig {
    std::uint32_t groups = 1;
    std::size_t splits = 1;
    std::size_t workers = 1;
    bool deterministic = true;
};

struct HprepostStats {
    std::uint64_t tree_nodes = 0;  // summed over group trees
    std::uint64_t peak_codes = 0;  // max over group miners
    mr::JobTrace trace;            // both jobs
};

/// Job 1: parallel item counting over the engine. Tallies n on a
/// reserved key, resolves m, and returns the F-list with the same
/// sort/tie rule as build_flist.
std::pair<FList, std::size_t> job1_flist(const TransactionDatabase& db,
                                         const MinSupSpec& spec,
                                         std::size_t splits,
                                         std::size_t workers = 1,
                                         mr::JobTrace* trace = nullptr);

/// One shard per group that owns at least one item of `t`: the prefix of
/// `t` up to and including the group's last owned item. That prefix
/// carries every item of every itemset anchored in the group.
std::vector<std::pair<std::uint32_t, ProjectedTransaction>> shard_transaction(
    const ProjectedTransaction& t, const FList& flist,
    const GroupAssignment& groups);

/// Job 2: group-dependent tree building and mining. Each group's reducer
/// builds a private PPC-tree from its shards and emits itemsets of size
/// >= 2 anchored in the group; 1-itemsets come from the F-list.
MiningResult job2_mine(const TransactionDatabase& db, const FList& flist,
                       std::uint64_t m, const GroupAssignment& groups,
                       std::size_t splits, std::size_t workers = 1,
                       HprepostStats* stats = nullptr);

/// The full two-job pipeline; identical output to sequential prepost.
MiningResult hprepost(const TransactionDatabase& db, const MinSupSpec& spec,
                      const HprepostConfig& config = {},
                      HprepostStats* stats = nullptr);

}  // namespace ppmine
