#pragma once

#include "ppmine/core.hpp"

namespace ppmine {

/// Hard input caps for the exponential ground-truth oracle.
struct OracleConfig {
    static constexpr std::size_t kMaxItems = 16;
    static constexpr std::size_t kMaxTransactions = 64;
};

/// Ground truth by exhaustive subset enumeration over the distinct-item
/// universe with direct containment counting. Shares no machinery with
/// the tree- or list-based miners. Throws when the caps are exceeded.
MiningResult brute_force(const TransactionDatabase& db, std::uint64_t m);

/// Classic FP-tree / conditional-pattern-base mining, using the same
/// F-list sort and tie-break as the PPC-tree path. `peak_nodes`, when
/// given, receives the maximum number of simultaneously live tree nodes
/// (initial plus conditional trees).
MiningResult fp_growth(const TransactionDatabase& db, std::uint64_t m,
                       std::uint64_t* peak_nodes = nullptr);

}  // namespace ppmine
