// ppmine: frequent-itemset mining over FIMI transaction files.
//
// Subcommands: mine, verify, bench, stats, gen. Exit codes: 0 success,
// 1 usage error, 2 input parse error, 3 verification mismatch,
// 4 internal failure.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "ppmine/baselines.hpp"
#include "ppmine/hprepost.hpp"
#include "ppmine/io.hpp"
#include "ppmine/nlist_miner.hpp"

namespace {

using namespace ppmine;
using Clock = std::chrono::steady_clock;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInternal = 4;

struct MineFlags {
    std::string input;
    double min_sup = 0.0;
    std::uint64_t min_count = 0;
    std::string algo = "prepost";
    std::uint32_t groups = 1;
    std::size_t splits = 1;
    std::size_t workers = 1;
    std::string output;
};

MinSupSpec threshold(const MineFlags& flags) {
    if (flags.min_count > 0) return MinSupSpec::absolute(flags.min_count);
    return MinSupSpec::fraction(flags.min_sup);
}

struct AlgoRun {
    MiningResult result;
    double runtime_ms = 0.0;
    std::uint64_t peak_nodes = 0;
    std::uint64_t peak_codes = 0;
};

AlgoRun run_algo(const std::string& algo, const TransactionDatabase& db,
                 const MinSupSpec& spec, std::uint32_t groups,
                 std::size_t splits, std::size_t workers) {
    AlgoRun run;
    const std::uint64_t m = spec.resolve(db.size());
    auto start = Clock::now();
    if (algo == "prepost") {
        MineStats stats;
        run.result = prepost(db, m, &stats);
        run.peak_nodes = stats.tree_nodes;
        run.peak_codes = stats.peak_codes;
    } else if (algo == "hprepost") {
        HprepostStats stats;
        run.result = hprepost(db, spec, {groups, splits, workers}, &stats);
        run.peak_nodes = stats.tree_nodes;
        run.peak_codes = stats.peak_codes;
    } else if (algo == "fpgrowth") {
        run.result = fp_growth(db, m, &run.peak_nodes);
    } else if (algo == "bruteforce") {
        run.result = brute_force(db, m);
    } else {
        throw CLI::ValidationError("--algo", "unknown algorithm '" + algo + "'");
    }
    run.runtime_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return run;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(token);
    return out;
}

int cmd_mine(const MineFlags& flags) {
    auto db = parse_fimi_file(flags.input);
    auto run = run_algo(flags.algo, db, threshold(flags), flags.groups,
                        flags.splits, flags.workers);
    if (flags.output.empty()) {
        write_result(run.result, std::cout);
    } else {
        std::ofstream out(flags.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + flags.output);
        write_result(run.result, out);
    }
    return 0;
}

int cmd_verify(const MineFlags& flags, const std::string& algos_csv) {
    auto db = parse_fimi_file(flags.input);
    auto spec = threshold(flags);
    auto algos = split_list(algos_csv);
    if (algos.empty()) throw CLI::ValidationError("--algos", "empty algorithm list");

    auto reference = run_algo(algos[0], db, spec, flags.groups, flags.splits,
                              flags.workers);
    for (std::size_t i = 1; i < algos.size(); ++i) {
        auto other = run_algo(algos[i], db, spec, flags.groups, flags.splits,
                              flags.workers);
        if (auto diff = first_difference(reference.result, other.result)) {
            std::cerr << "mismatch between " << algos[0] << " and " << algos[i]
                      << ": " << diff->describe() << "\n";
            return kExitMismatch;
        }
    }
    std::cout << "agree: " << algos_csv << " (" << reference.result.size()
              << " itemsets)\n";
    return 0;
}

int cmd_bench(const MineFlags& flags, const std::string& min_sups_csv,
              const std::string& algos_csv, int repeat, const std::string& csv_path) {
    auto db = parse_fimi_file(flags.input);
    const std::string dataset =
        std::filesystem::path(flags.input).filename().string();

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!csv_path.empty()) {
        file.open(csv_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + csv_path);
        out = &file;
    }
    *out << "dataset,algo,min_sup,m,runtime_ms,peak_nodes,peak_codes,"
            "result_count,groups,splits,workers\n";

    for (const auto& algo : split_list(algos_csv)) {
        for (const auto& min_sup : split_list(min_sups_csv)) {
            auto spec = MinSupSpec::fraction(std::stod(min_sup));
            std::vector<double> runtimes;
            AlgoRun last;
            for (int r = 0; r < repeat; ++r) {
                last = run_algo(algo, db, spec, flags.groups, flags.splits,
                                flags.workers);
                runtimes.push_back(last.runtime_ms);
            }
            std::sort(runtimes.begin(), runtimes.end());
            const double median = runtimes[runtimes.size() / 2];
            *out << dataset << ',' << algo << ',' << min_sup << ','
                 << spec.resolve(db.size()) << ',' << median << ','
                 << last.peak_nodes << ',' << last.peak_codes << ','
                 << last.result.size() << ',' << flags.groups << ','
                 << flags.splits << ',' << flags.workers << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PPC-tree / N-list frequent-itemset mining toolkit"};
    app.require_subcommand(1);

    MineFlags flags;
    std::string algos_csv, min_sups_csv, csv_path;
    int repeat = 3;
    std::uint32_t gen_items = 0;
    std::size_t gen_transactions = 0;
    double gen_avg_len = 0.0;
    std::uint64_t gen_seed = 0;

    auto add_threshold = [&](CLI::App* cmd) {
        auto* frac = cmd->add_option("--min-sup", flags.min_sup,
                                     "minimum support as a fraction in (0, 1]");
        auto* abs = cmd->add_option("--min-count", flags.min_count,
                                    "minimum support as an absolute count");
        frac->excludes(abs);
        abs->excludes(frac);
        cmd->callback([frac, abs] {
            if (frac->count() == 0 && abs->count() == 0)
                throw CLI::RequiredError("--min-sup or --min-count");
        });
    };
    auto add_parallel = [&](CLI::App* cmd) {
        cmd->add_option("--groups", flags.groups, "mining groups (hprepost)");
        cmd->add_option("--splits", flags.splits, "input splits (hprepost)");
        cmd->add_option("--workers", flags.workers, "worker threads (hprepost)");
    };

    auto* mine_cmd = app.add_subcommand("mine", "mine frequent itemsets");
    mine_cmd->add_option("--input", flags.input)->required();
    add_threshold(mine_cmd);
    mine_cmd->add_option("--algo", flags.algo,
                         "prepost|hprepost|fpgrowth|bruteforce");
    add_parallel(mine_cmd);
    mine_cmd->add_option("--output", flags.output, "result file (default stdout)");

    auto* verify_cmd =
        app.add_subcommand("verify", "run several algorithms and compare results");
    verify_cmd->add_option("--input", flags.input)->required();
    add_threshold(verify_cmd);
    verify_cmd->add_option("--algos", algos_csv, "comma-separated list")->required();
    add_parallel(verify_cmd);

    auto* bench_cmd = app.add_subcommand("bench", "benchmark algorithms, emit CSV");
    bench_cmd->add_option("--input", flags.input)->required();
    bench_cmd->add_option("--min-sups", min_sups_csv, "comma-separated fractions")
        ->required();
    bench_cmd->add_option("--algos", algos_csv, "comma-separated list")->required();
    bench_cmd->add_option("--repeat", repeat, "runs per configuration (median)");
    bench_cmd->add_option("--csv", csv_path, "CSV file (default stdout)");
    add_parallel(bench_cmd);

    auto* stats_cmd = app.add_subcommand("stats", "print dataset characteristics");
    stats_cmd->add_option("--input", flags.input)->required();

    auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic FIMI file");
    gen_cmd->add_option("--items", gen_items)->required();
    gen_cmd->add_option("--transactions", gen_transactions)->required();
    gen_cmd->add_option("--avg-len", gen_avg_len)->required();
    gen_cmd->add_option("--seed", gen_seed)->required();
    gen_cmd->add_option("--output", flags.output)->required();

    try {
        app.parse(argc, argv);

        if (mine_cmd->parsed()) return cmd_mine(flags);
        if (verify_cmd->parsed()) return cmd_verify(flags, algos_csv);
        if (bench_cmd->parsed())
            return cmd_bench(flags, min_sups_csv, algos_csv, repeat, csv_path);
        if (stats_cmd->parsed()) {
            auto s = dataset_stats(parse_fimi_file(flags.input));
            std::cout << s.items << ' ' << s.transactions << ' ' << std::fixed
                      << std::setprecision(1) << s.avg_length << '\n';
            return 0;
        }
        if (gen_cmd->parsed()) {
            auto db = generate(gen_items, gen_transactions, gen_avg_len, gen_seed);
            std::ofstream out(flags.output, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open " + flags.output);
            write_fimi(db, out);
            return 0;
        }
        return kExitUsage;
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help
        std::cerr << err.what() << "\n\n" << app.help() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& err) {
        std::cerr << err.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& err) {
        std::cerr << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitInternal;
    }
}
