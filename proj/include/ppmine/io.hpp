#pragma once

#include <iosfwd>
#include <string>

#include "ppmine/core.hpp"

namespace ppmine {

struct DatasetStats {
    std::uint64_t items = 0;         // distinct item count
    std::uint64_t transactions = 0;
    double avg_length = 0.0;         // mean transaction length after dedup
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& message);

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// FIMI transaction format: one transaction per line, base-10 unsigned
/// item ids separated by spaces/tabs, optional trailing CR, blank lines
/// skipped, in-line duplicates removed.
TransactionDatabase parse_fimi(std::istream& in);
TransactionDatabase parse_fimi_file(const std::string& path);

void write_fimi(const TransactionDatabase& db, std::ostream& out);

DatasetStats dataset_stats(const TransactionDatabase& db);

/// Canonical result serialization: `id id ...\tsupport` per itemset, ids
/// ascending, lines ordered by (size, lexicographic id sequence).
/// Byte-deterministic.
void write_result(const MiningResult& result, std::ostream& out);

/// Seeded synthetic database: transaction lengths drawn around avg_len,
/// item popularity rank-inverse skewed so trees share prefixes. Item ids
/// are 1..items.
TransactionDatabase generate(std::uint32_t items, std::size_t transactions,
                             double avg_len, std::uint64_t seed);

}  // namespace ppmine
