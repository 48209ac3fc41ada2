#include "ppmine/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

namespace ppmine {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

TransactionDatabase parse_fimi(std::istream& in) {
    TransactionDatabase db;
    std::string line;
    std::size_t line_no = 0;
    std::vector<Item> items;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        items.clear();
        std::size_t i = 0;
        const std::size_t len = line.size();
        while (i < len) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            std::uint64_t value = 0;
            std::size_t start = i;
            while (i < len && line[i] != ' ' && line[i] != '\t') {
                char c = line[i];
                if (c < '0' || c > '9')
                    throw ParseError(line_no, "non-numeric token '" +
                                                  line.substr(start, i - start + 1) + "'");
                value = value * 10 + static_cast<std::uint64_t>(c - '0');
                if (value > std::numeric_limits<Item>::max())
                    throw ParseError(line_no, "item id out of range");
                ++i;
            }
            items.push_back(static_cast<Item>(value));
        }
        if (!items.empty()) db.transactions.push_back(make_transaction(items));
    }
    return db;
}

TransactionDatabase parse_fimi_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_fimi(in);
}

void write_fimi(const TransactionDatabase& db, std::ostream& out) {
    for (const auto& t : db.transactions) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) out << ' ';
            out << t[i];
        }
        out << '\n';
    }
}

DatasetStats dataset_stats(const TransactionDatabase& db) {
    DatasetStats s;
    s.transactions = db.size();
    std::vector<Item> distinct;
    std::uint64_t total = 0;
    for (const auto& t : db.transactions) {
        total += t.size();
        distinct.insert(distinct.end(), t.begin(), t.end());
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    s.items = distinct.size();
    s.avg_length = s.transactions == 0
                       ? 0.0
                       : static_cast<double>(total) / static_cast<double>(s.transactions);
    return s;
}

void write_result(const MiningResult& result, std::ostream& out) {
    std::vector<const Itemset*> order;
    order.reserve(result.size());
    for (const auto& [itemset, sup] : result.entries()) order.push_back(&itemset);
    std::sort(order.begin(), order.end(), [](const Itemset* a, const Itemset* b) {
        if (a->size() != b->size()) return a->size() < b->size();
        return *a < *b;
    });
    for (const Itemset* itemset : order) {
        for (std::size_t i = 0; i < itemset->size(); ++i) {
            if (i) out << ' ';
            out << (*itemset)[i];
        }
        out << '\t' << *result.support_of(*itemset) << '\n';
    }
}

TransactionDatabase generate(std::uint32_t items, std::size_t transactions,
                             double avg_len, std::uint64_t seed) {
    if (items == 0 || avg_len < 1.0 || avg_len > static_cast<double>(items))
        throw std::invalid_argument("generate: need 1 <= avg_len <= items");

    std::mt19937_64 rng(seed);
    std::vector<double> weights(items);
    for (std::uint32_t i = 0; i < items; ++i) weights[i] = 1.0 / (1.0 + i);
    std::discrete_distribution<std::uint32_t> pick(weights.begin(), weights.end());
    std::normal_distribution<double> length(avg_len, std::max(0.5, avg_len / 4.0));

    TransactionDatabase db;
    db.transactions.reserve(transactions);
    std::vector<Item> scratch;
    for (std::size_t t = 0; t < transactions; ++t) {
        auto len = static_cast<std::size_t>(std::clamp(
            std::llround(length(rng)), 1ll, static_cast<long long>(items)));
        scratch.clear();
        while (scratch.size() < len) {
            Item item = pick(rng) + 1;  // ids 1..items
            if (std::find(scratch.begin(), scratch.end(), item) == scratch.end())
                scratch.push_back(item);
        }
        db.transactions.push_back(make_transaction(scratch));
    }
    return db;
}

}  // namespace ppmine
