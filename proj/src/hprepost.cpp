#include "ppmine/hprepost.hpp"

#include <algorithm>
#include <mutex>

namespace ppmine {

namespace {

// Job 1 keys are item ids widened to int64; -1 tallies the transaction
// count so m can be resolved from a fraction after the job.
constexpr std::int64_t kTransactionCountKey = -1;

}  // namespace

std::pair<FList, std::size_t> job1_flist(const TransactionDatabase& db,
                                         const MinSupSpec& spec,
                                         std::size_t splits,
                                         std::size_t workers,
                                         mr::JobTrace* trace) {
    mr::JobSpec<Transaction, std::int64_t, std::uint64_t, std::uint64_t> job;
    job.map = [](const Transaction& t, mr::Emitter<std::int64_t, std::uint64_t>& out) {
        out.emit(kTransactionCountKey, 1);
        for (Item item : t) out.emit(static_cast<std::int64_t>(item), 1);
    };
    job.combine = [](const std::int64_t&, std::vector<std::uint64_t>&& values) {
        std::uint64_t sum = 0;
        for (auto v : values) sum += v;
        return std::vector<std::uint64_t>{sum};
    };
    job.reduce = [](const std::int64_t&, std::vector<std::uint64_t>&& values,
                    std::vector<std::uint64_t>& out) {
        std::uint64_t sum = 0;
        for (auto v : values) sum += v;
        out.push_back(sum);
    };
    job.workers = workers;
    job.reducers = std::max<std::size_t>(1, workers);

    auto counts = mr::run_job(
        job, mr::make_splits(db.size(), splits),
        std::function<const Transaction&(std::size_t)>(
            [&](std::size_t i) -> const Transaction& { return db.transactions[i]; }),
        trace);

    std::size_t n = 0;
    if (auto it = counts.find(kTransactionCountKey); it != counts.end())
        n = it->second.front();
    const std::uint64_t m = spec.resolve(n);

    std::vector<FListEntry> entries;
    for (const auto& [key, sums] : counts) {
        if (key == kTransactionCountKey) continue;
        if (sums.front() >= m)
            entries.push_back({static_cast<Item>(key), sums.front(), 0});
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.item < b.item;
    });
    return {FList(std::move(entries)), n};
}

std::vector<std::pair<std::uint32_t, ProjectedTransaction>> shard_transaction(
    const ProjectedTransaction& t, const FList& flist,
    const GroupAssignment& groups) {
    // Last owned position per group, -1 when the group owns nothing.
    std::vector<std::ptrdiff_t> last(groups.groups, -1);
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto rank = flist.rank_of(t[i]);
        if (!rank) throw std::logic_error("shard_transaction: item not in F-list");
        last[groups.group_of_rank(*rank)] = static_cast<std::ptrdiff_t>(i);
    }

    std::vector<std::pair<std::uint32_t, ProjectedTransaction>> shards;
    for (std::uint32_t g = 0; g < groups.groups; ++g) {
        if (last[g] < 0) continue;
        shards.emplace_back(
            g, ProjectedTransaction(t.begin(), t.begin() + last[g] + 1));
    }
    return shards;
}

MiningResult job2_mine(const TransactionDatabase& db, const FList& flist,
                       std::uint64_t m, const GroupAssignment& groups,
                       std::size_t splits, std::size_t workers,
                       HprepostStats* stats) {
    using Output = std::pair<Itemset, std::uint64_t>;
    std::mutex stats_mutex;

    mr::JobSpec<Transaction, std::uint32_t, ProjectedTransaction, Output> job;
    job.map = [&](const Transaction& t,
                  mr::Emitter<std::uint32_t, ProjectedTransaction>& out) {
        for (auto& [g, shard] : shard_transaction(project_transaction(t, flist), flist, groups))
            out.emit(g, std::move(shard));
    };
    job.reduce = [&](const std::uint32_t& group,
                     std::vector<ProjectedTransaction>&& shards,
                     std::vector<Output>& out) {
        PPCTree tree(flist);
        for (const auto& shard : shards) tree.insert(shard);
        tree.assign_orders();
        auto nlists = tree.build_nlists();
        auto pairs = tree.count_pairs();

        MineStats mine_stats;
        MineOptions options;
        options.anchor_filter = [&](std::uint32_t rank) {
            return groups.group_of_rank(rank) == group;
        };
        options.stats = &mine_stats;
        MiningResult local = mine(flist, nlists, pairs, m, options);

        for (const auto& [itemset, sup] : local.entries())
            out.emplace_back(itemset, sup);
        if (stats) {
            std::lock_guard lock(stats_mutex);
            stats->tree_nodes += tree.node_count();
            stats->peak_codes = std::max(stats->peak_codes, mine_stats.peak_codes);
        }
    };
    job.workers = workers;
    job.reducers = groups.groups;  // one reduce partition per group

    auto grouped = mr::run_job(
        job, mr::make_splits(db.size(), splits),
        std::function<const Transaction&(std::size_t)>(
            [&](std::size_t i) -> const Transaction& { return db.transactions[i]; }),
        stats ? &stats->trace : nullptr);

    // Anchor ownership makes the per-group key sets disjoint; add throws
    // if a collision ever shows up.
    MiningResult result;
    for (const auto& e : flist.entries())
        result.add({e.item}, e.count);
    for (auto& [group, outputs] : grouped)
        for (auto& [itemset, sup] : outputs)
            result.add(std::move(itemset), sup);
    return result;
}

MiningResult hprepost(const TransactionDatabase& db, const MinSupSpec& spec,
                      const HprepostConfig& config, HprepostStats* stats) {
    if (config.groups < 1 || config.splits < 1 || config.workers < 1)
        throw std::invalid_argument("hprepost: groups, splits and workers must be >= 1");

    auto [flist, n] = job1_flist(db, spec, config.splits, config.workers,
                                 stats ? &stats->trace : nullptr);
    const std::uint64_t m = spec.resolve(n);
    return job2_mine(db, flist, m, GroupAssignment{config.groups}, config.splits,
                     config.workers, stats);
}

}  // namespace ppmine
