#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ppmine {

using Item = std::uint32_t;

/// A transaction is a deduplicated item set stored in ascending id order.
using Transaction = std::vector<Item>;

/// Sorts and deduplicates raw items into canonical Transaction form.
Transaction make_transaction(std::vector<Item> items);

struct TransactionDatabase {
    std::vector<Transaction> transactions;

    std::size_t size() const { return transactions.size(); }
    bool empty() const { return transactions.empty(); }
};

/// Minimum support, given either as a fraction of the database size or as
/// an absolute transaction count.
class MinSupSpec {
  public:
    static MinSupSpec fraction(double f);
    static MinSupSpec absolute(std::uint64_t m);

    /// Resolves to an absolute count for a database of n transactions:
    /// max(1, ceil(f*n)) for fractions, the stored count otherwise.
    std::uint64_t resolve(std::size_t n) const;

    bool is_fraction() const { return fraction_.has_value(); }
    double fraction_value() const { return *fraction_; }

  private:
    MinSupSpec() = default;
    std::optional<double> fraction_;
    std::uint64_t absolute_ = 0;
};

struct FListEntry {
    Item item;
    std::uint64_t count;
    std::uint32_t rank;  // 0-based position in descending-support order
};

/// Frequent 1-itemsets in descending-support order (ties by ascending id).
/// The rank order is the canonical item order for tree insertion.
class FList {
  public:
    FList() = default;
    /// `entries` must already be sorted (count desc, item asc); ranks are
    /// assigned here.
    explicit FList(std::vector<FListEntry> entries);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<FListEntry>& entries() const { return entries_; }
    const FListEntry& entry(std::uint32_t rank) const { return entries_[rank]; }

    /// Rank of an item, or nullopt when the item is infrequent.
    std::optional<std::uint32_t> rank_of(Item item) const;

  private:
    std::vector<FListEntry> entries_;
    std::unordered_map<Item, std::uint32_t> rank_of_;
};

/// Canonical external itemset form: ascending item ids, nonempty.
using Itemset = std::vector<Item>;

/// The common output of every mining algorithm: itemset -> support count.
class MiningResult {
  public:
    void add(Itemset itemset, std::uint64_t support);

    /// Merges entries from `other`; duplicate keys are a logic error
    /// (callers merge disjoint key sets by construction).
    void merge(MiningResult&& other);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::map<Itemset, std::uint64_t>& entries() const { return entries_; }

    std::optional<std::uint64_t> support_of(const Itemset& itemset) const;

    bool operator==(const MiningResult& other) const = default;

  private:
    std::map<Itemset, std::uint64_t> entries_;
};

/// One differing itemset between two results; a missing side is nullopt.
struct ResultDifference {
    Itemset itemset;
    std::optional<std::uint64_t> left;
    std::optional<std::uint64_t> right;

    std::string describe() const;
};

/// Reports the first itemset (in canonical order) where the two results
/// disagree, or nullopt when they are equal.
std::optional<ResultDifference> first_difference(const MiningResult& a,
                                                 const MiningResult& b);

}  // namespace ppmine
