#include "ppmine/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ppmine {

Transaction make_transaction(std::vector<Item> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

MinSupSpec MinSupSpec::fraction(double f) {
    if (!(f > 0.0) || f > 1.0)
        throw std::invalid_argument("min-sup fraction must be in (0, 1]");
    MinSupSpec spec;
    spec.fraction_ = f;
    return spec;
}

MinSupSpec MinSupSpec::absolute(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("min-sup count must be >= 1");
    MinSupSpec spec;
    spec.absolute_ = m;
    return spec;
}

std::uint64_t MinSupSpec::resolve(std::size_t n) const {
    if (!fraction_) return absolute_;
    // The epsilon keeps exact products (f*n integral) from ticking up a
    // whole unit through floating-point representation error.
    auto m = static_cast<std::uint64_t>(
        std::ceil(*fraction_ * static_cast<double>(n) - 1e-9));
    return std::max<std::uint64_t>(1, m);
}

FList::FList(std::vector<FListEntry> entries) : entries_(std::move(entries)) {
    for (std::uint32_t r = 0; r < entries_.size(); ++r) {
        entries_[r].rank = r;
        rank_of_.emplace(entries_[r].item, r);
    }
}

std::optional<std::uint32_t> FList::rank_of(Item item) const {
    auto it = rank_of_.find(item);
    if (it == rank_of_.end()) return std::nullopt;
    return it->second;
}

void MiningResult::add(Itemset itemset, std::uint64_t support) {
    auto [it, inserted] = entries_.emplace(std::move(itemset), support);
    if (!inserted) throw std::logic_error("duplicate itemset in MiningResult");
}

void MiningResult::merge(MiningResult&& other) {
    for (auto& [itemset, support] : other.entries_)
        add(itemset, support);
    other.entries_.clear();
}

std::optional<std::uint64_t> MiningResult::support_of(const Itemset& itemset) const {
    auto it = entries_.find(itemset);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::string ResultDifference::describe() const {
    std::ostringstream os;
    os << "itemset {";
    for (std::size_t i = 0; i < itemset.size(); ++i) {
        if (i) os << ' ';
        os << itemset[i];
    }
    os << "}: ";
    auto side = [&](const std::optional<std::uint64_t>& s) {
        if (s) os << *s; else os << "absent";
    };
    side(left);
    os << " vs ";
    side(right);
    return os.str();
}

std::optional<ResultDifference> first_difference(const MiningResult& a,
                                                 const MiningResult& b) {
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ia == ea) return ResultDifference{ib->first, std::nullopt, ib->second};
        if (ib == eb) return ResultDifference{ia->first, ia->second, std::nullopt};
        if (ia->first < ib->first)
            return ResultDifference{ia->first, ia->second, std::nullopt};
        if (ib->first < ia->first)
            return ResultDifference{ib->first, std::nullopt, ib->second};
        if (ia->second != ib->second)
            return ResultDifference{ia->first, ia->second, ib->second};
        ++ia, ++ib;
    }
    return std::nullopt;
}

}  // namespace ppmine
