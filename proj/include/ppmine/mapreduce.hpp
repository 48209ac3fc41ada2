#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ppmine::mr {

/// A contiguous range of record indices [begin, end).
struct InputSplit {
    std::size_t index;
    std::size_t begin;
    std::size_t end;

    std::size_t size() const { return end - begin; }
};

/// Partitions 0..n-1 into s contiguous splits whose sizes differ by at
/// most one; splits beyond n are empty.
inline std::vector<InputSplit> make_splits(std::size_t n, std::size_t s) {
    if (s == 0) throw std::invalid_argument("make_splits: split count must be >= 1");
    std::vector<InputSplit> splits;
    splits.reserve(s);
    const std::size_t base = n / s, extra = n % s;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < s; ++i) {
        std::size_t len = base + (i < extra ? 1 : 0);
        splits.push_back({i, pos, pos + len});
        pos += len;
    }
    return splits;
}

/// Per-task timings and conservation counters, fed to the bench harness.
struct JobTrace {
    struct Task {
        std::string kind;  // "map" or "reduce"
        std::size_t index;
        double ms;
    };
    std::vector<Task> tasks;
    std::uint64_t mapped_kvs = 0;       // KVs emitted by all map tasks
    std::uint64_t delivered_values = 0; // values handed to reduce calls
};

template <class Key, class Value>
class Emitter {
  public:
    void emit(Key key, Value value) {
        pairs_.emplace_back(std::move(key), std::move(value));
    }
    std::vector<std::pair<Key, Value>>& pairs() { return pairs_; }

  private:
    std::vector<std::pair<Key, Value>> pairs_;
};

/// Map, optional combine, reduce. Map and reduce must be pure with
/// respect to engine-shared state; each reduce call owns its values.
template <class Record, class Key, class Value, class Out>
struct JobSpec {
    std::function<void(const Record&, Emitter<Key, Value>&)> map;
    /// Optional; folds one key's values within a single map task.
    std::function<std::vector<Value>(const Key&, std::vector<Value>&&)> combine;
    std::function<void(const Key&, std::vector<Value>&&, std::vector<Out>&)> reduce;
    std::size_t reducers = 1;
    std::size_t workers = 1;
    /// Deterministic mode (default) fixes key order and, per key, value
    /// order as (split index, emission order). Free-running mode is for
    /// benchmarking only.
    bool deterministic = true;
};

namespace detail {

// Runs fn(i) for i in 0..count-1 on up to `workers` threads; rethrows the
// first failure after all threads join.
inline void parallel_for(std::size_t count, std::size_t workers,
                         const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr error;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < std::min(workers, count); ++w)
        threads.emplace_back(body);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Executes one job: map tasks over splits, hash-partitioned shuffle,
/// reduce tasks over partitions. Returns reduce outputs per key; with the
/// deterministic flag set the run is a pure function of (job, splits,
/// records) regardless of worker count.
template <class Record, class Key, class Value, class Out>
std::map<Key, std::vector<Out>> run_job(
    const JobSpec<Record, Key, Value, Out>& job,
    const std::vector<InputSplit>& splits,
    const std::function<const Record&(std::size_t)>& record_at,
    JobTrace* trace = nullptr) {
    if (job.reducers == 0 || job.workers == 0)
        throw std::invalid_argument("run_job: reducers and workers must be >= 1");

    using Clock = std::chrono::steady_clock;
    const std::size_t R = job.reducers;
    std::hash<Key> hasher;

    // partition -> split -> (key, value) in emission order.
    std::vector<std::vector<std::vector<std::pair<Key, Value>>>> shuffle(R);
    for (auto& p : shuffle) p.resize(splits.size());

    std::mutex trace_mutex;
    std::atomic<std::uint64_t> mapped{0};

    detail::parallel_for(splits.size(), job.workers, [&](std::size_t si) {
        auto start = Clock::now();
        const InputSplit& split = splits[si];
        Emitter<Key, Value> emitter;
        for (std::size_t r = split.begin; r < split.end; ++r)
            job.map(record_at(r), emitter);

        auto pairs = std::move(emitter.pairs());

        if (job.combine) {
            // Group by key, stable so per-key value order stays emission
            // order, then fold each group.
            std::stable_sort(pairs.begin(), pairs.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<std::pair<Key, Value>> combined;
            std::size_t i = 0;
            while (i < pairs.size()) {
                std::size_t j = i;
                std::vector<Value> values;
                while (j < pairs.size() && !(pairs[i].first < pairs[j].first))
                    values.push_back(std::move(pairs[j++].second));
                auto folded = job.combine(pairs[i].first, std::move(values));
                for (auto& v : folded)
                    combined.emplace_back(pairs[i].first, std::move(v));
                i = j;
            }
            pairs = std::move(combined);
        }

        // Counted after combining, so the shuffle conservation invariant
        // (mapped == delivered) holds in every configuration.
        mapped += pairs.size();

        for (auto& [key, value] : pairs) {
            std::size_t p = hasher(key) % R;
            shuffle[p][si].emplace_back(std::move(key), std::move(value));
        }
        if (trace) {
            double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
            std::lock_guard lock(trace_mutex);
            trace->tasks.push_back({"map", si, ms});
        }
    });

    std::vector<std::map<Key, std::vector<Out>>> partition_out(R);
    std::atomic<std::uint64_t> delivered{0};

    detail::parallel_for(R, job.workers, [&](std::size_t p) {
        auto start = Clock::now();
        // Splits are concatenated in split order, so values of one key
        // arrive ordered by (split index, emission order).
        std::map<Key, std::vector<Value>> groups;
        for (auto& per_split : shuffle[p])
            for (auto& [key, value] : per_split)
                groups[std::move(key)].push_back(std::move(value));

        for (auto& [key, values] : groups) {
            delivered += values.size();
            std::vector<Out> outs;
            job.reduce(key, std::move(values), outs);
            if (!outs.empty()) partition_out[p].emplace(key, std::move(outs));
        }
        if (trace) {
            double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
            std::lock_guard lock(trace_mutex);
            trace->tasks.push_back({"reduce", p, ms});
        }
    });

    std::map<Key, std::vector<Out>> result;
    for (auto& part : partition_out)
        for (auto& [key, outs] : part)
            result.emplace(std::move(key), std::move(outs));

    if (trace) {
        trace->mapped_kvs += mapped.load();
        trace->delivered_values += delivered.load();
    }
    return result;
}

}  // namespace ppmine::mr
