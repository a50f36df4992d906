#pragma once

// Benchmark harness comparing the naive and the cover-based chaining
// algorithms on synthetic graphs. Reads are sampled as path label strings
// with optional point mutations. Anchors are produced once per read and
// both methods are timed on the identical anchor set; graph parsing,
// cover construction and anchor finding are not part of the timed call.

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dagchain/anchors.hpp"
#include "dagchain/chain.hpp"
#include "dagchain/graph.hpp"
#include "dagchain/mpc.hpp"
#include "dagchain/random.hpp"
#include "dagchain/reach.hpp"

namespace dagchain {

struct BenchConfig {
    std::vector<int> node_sizes{8000};
    std::vector<int> widths{10};
    int alphabet = 4;
    int read_length = 1000;
    double mutation_rate = 0.02;
    int min_length = 1;
    long long max_anchors = -1;
    int reads_per_graph = 1;
    int reps = 3;
    std::uint64_t seed = 1;
    long long extra_edges = -1;
};

struct BenchRecord {
    int nodes = 0;
    long long edge_count = 0;
    int width = 0;            // size of the minimum path cover actually used
    long long anchor_count = 0;
    double naive_ms = 0.0;
    double mpc_ms = 0.0;
    long long coverage = 0;   // equal for both methods by construction
    std::uint64_t graph_seed = 0;
    int read_index = 0;
};

struct BenchReport {
    std::vector<BenchRecord> records;
};

namespace detail {
inline std::vector<Symbol> sample_read(const LabeledDag& dag, int length, double mutation_rate, int alphabet,
                                       Rng& rng) {
    std::vector<Symbol> read;
    int v = static_cast<int>(rng.uniform(1, std::max(1, dag.node_count() / 4)));
    while (static_cast<int>(read.size()) < length) {
        read.push_back(dag.label(v));
        const auto& out = dag.out_neighbors(v);
        if (out.empty()) break;
        v = out[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(out.size()) - 1))];
    }
    for (auto& s : read)
        if (rng.chance(mutation_rate)) s = rng.uniform(0, alphabet - 1);
    return read;
}

template <class F>
inline double mean_ms(int reps, F&& f) {
    double total = 0.0;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        total += std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    return total / reps;
}
} // namespace detail

inline BenchReport run_bench(const BenchConfig& cfg) {
    BenchReport report;
    std::uint64_t instance = 0;
    for (int nodes : cfg.node_sizes)
        for (int width : cfg.widths) {
            const std::uint64_t graph_seed = cfg.seed * 1000003ull + instance++;
            LabeledDag dag = generate_dag(nodes, width, cfg.alphabet, graph_seed, cfg.extra_edges);
            PathCover cover = minimum_path_cover(dag);
            LastToReach l2r = last_to_reach(dag, cover);
            ForwardLinks links = forward_links(cover, l2r);

            Rng rng(graph_seed ^ 0x9e3779b97f4a7c15ull);
            for (int r = 0; r < cfg.reads_per_graph; ++r) {
                std::vector<Symbol> read = detail::sample_read(dag, cfg.read_length, cfg.mutation_rate, cfg.alphabet, rng);
                AnchorParams params{cfg.min_length, cfg.max_anchors};
                std::vector<Anchor> anchors = find_anchors(dag, read, params);
                if (anchors.empty()) continue;

                ChainResult naive, mpc;
                BenchRecord rec;
                rec.naive_ms = detail::mean_ms(cfg.reps, [&] { naive = chain_dag_naive(dag, anchors); });
                rec.mpc_ms = detail::mean_ms(cfg.reps, [&] { mpc = chain_dag_mpc(dag, cover, links, anchors); });
                if (naive.coverage != mpc.coverage)
                    throw std::logic_error("bench invariant violated: naive and mpc coverage differ");

                rec.nodes = dag.node_count();
                rec.edge_count = static_cast<long long>(dag.edges().size());
                rec.width = cover.path_count();
                rec.anchor_count = static_cast<long long>(anchors.size());
                rec.coverage = mpc.coverage;
                rec.graph_seed = graph_seed;
                rec.read_index = r;
                report.records.push_back(rec);
            }
        }
    return report;
}

struct BenchGroupRow {
    std::string key;
    int count = 0;
    double mean_nodes = 0.0;
    double mpc_mean = 0.0, mpc_std = 0.0;
    double naive_mean = 0.0, naive_std = 0.0;
};

namespace detail {
inline void mean_std(const std::vector<double>& xs, double& mean, double& stddev) {
    mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    stddev = xs.size() > 1 ? std::sqrt(var / static_cast<double>(xs.size() - 1)) : 0.0;
}

inline std::vector<BenchGroupRow> group_rows(const std::map<std::pair<long long, std::string>, std::vector<const BenchRecord*>>& groups) {
    std::vector<BenchGroupRow> rows;
    for (const auto& [key, recs] : groups) {
        BenchGroupRow row;
        row.key = key.second;
        row.count = static_cast<int>(recs.size());
        std::vector<double> mpc, naive;
        for (const auto* r : recs) {
            row.mean_nodes += r->nodes;
            mpc.push_back(r->mpc_ms);
            naive.push_back(r->naive_ms);
        }
        row.mean_nodes /= static_cast<double>(recs.size());
        mean_std(mpc, row.mpc_mean, row.mpc_std);
        mean_std(naive, row.naive_mean, row.naive_std);
        rows.push_back(std::move(row));
    }
    return rows;
}
} // namespace detail

inline std::vector<BenchGroupRow> group_by_width(const BenchReport& report) {
    std::map<std::pair<long long, std::string>, std::vector<const BenchRecord*>> groups;
    for (const auto& r : report.records)
        groups[{r.width, "k=" + std::to_string(r.width)}].push_back(&r);
    return detail::group_rows(groups);
}

inline std::vector<BenchGroupRow> group_by_anchor_decade(const BenchReport& report) {
    std::map<std::pair<long long, std::string>, std::vector<const BenchRecord*>> groups;
    for (const auto& r : report.records) {
        long long upper = 1;
        while (upper < r.anchor_count) upper *= 10;
        const long long lower = upper / 10;
        groups[{upper, "N in (" + std::to_string(lower) + ".." + std::to_string(upper) + "]"}].push_back(&r);
    }
    return detail::group_rows(groups);
}

inline std::string render_text(const BenchReport& report) {
    std::ostringstream out;
    out << "records: " << report.records.size() << "\n\n";
    auto table = [&out](const char* title, const std::vector<BenchGroupRow>& rows) {
        out << title << "\n";
        out << "  group              count  mean|V|      mpc[ms]            naive[ms]\n";
        for (const auto& row : rows) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "  %-18s %5d  %7.0f  %9.2f +-%8.2f  %10.2f +-%9.2f\n", row.key.c_str(),
                          row.count, row.mean_nodes, row.mpc_mean, row.mpc_std, row.naive_mean, row.naive_std);
            out << buf;
        }
        out << "\n";
    };
    table("by width:", group_by_width(report));
    table("by anchor count:", group_by_anchor_decade(report));
    return out.str();
}

} // namespace dagchain
