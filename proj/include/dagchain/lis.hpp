#pragma once

// Longest strictly increasing subsequence, classic O(n log n) form on a
// sequence and the path-cover form on a labeled DAG: one tree per cover
// path, queries propagated along forward links so that a node only ever
// sees values of nodes that reach it.

#include <span>
#include <stdexcept>
#include <vector>

#include "dagchain/graph.hpp"
#include "dagchain/mpc.hpp"
#include "dagchain/reach.hpp"
#include "dagchain/rmq.hpp"

namespace dagchain {

struct LisResult {
    long long length = 0;
    // (node id or 1-based sequence position, original label), in chain order.
    std::vector<std::pair<int, Symbol>> witness;
    // best strictly increasing subsequence ending exactly at each node/position.
    std::vector<long long> best_ending_at; // index 0 unused
};

namespace detail {
// Order-preserving remap to ranks 1..r; equal symbols share a rank.
inline std::vector<int> dense_ranks(std::span<const Symbol> values, int& rank_count) {
    std::vector<Symbol> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    rank_count = static_cast<int>(sorted.size());
    std::vector<int> ranks(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin()) + 1;
    return ranks;
}

inline RmqTree lis_tree(int rank_count) {
    std::vector<long long> keys(static_cast<std::size_t>(rank_count) + 1);
    for (int k = 0; k <= rank_count; ++k) keys[static_cast<std::size_t>(k)] = k;
    RmqTree tree = RmqTree::with_keys(std::move(keys));
    tree.update(0, 0, -1);
    return tree;
}
} // namespace detail

inline LisResult lis_sequence(std::span<const Symbol> seq) {
    LisResult res;
    res.best_ending_at.assign(seq.size() + 1, 0);
    if (seq.empty()) return res;

    int rank_count = 0;
    std::vector<int> rank = detail::dense_ranks(seq, rank_count);
    RmqTree tree = detail::lis_tree(rank_count);

    std::vector<int> pred(seq.size() + 1, -1);
    int best_pos = 1;
    for (std::size_t i = 1; i <= seq.size(); ++i) {
        const RmqEntry q = tree.rmaxq(0, rank[i - 1] - 1);
        res.best_ending_at[i] = q.value + 1;
        pred[i] = static_cast<int>(q.payload);
        tree.update(rank[i - 1], res.best_ending_at[i], static_cast<long long>(i));
        if (res.best_ending_at[i] > res.best_ending_at[static_cast<std::size_t>(best_pos)]) best_pos = static_cast<int>(i);
    }

    res.length = res.best_ending_at[static_cast<std::size_t>(best_pos)];
    for (int i = best_pos; i > 0; i = pred[static_cast<std::size_t>(i)])
        res.witness.emplace_back(i, seq[static_cast<std::size_t>(i) - 1]);
    std::reverse(res.witness.begin(), res.witness.end());
    return res;
}

inline LisResult lis_dag(const LabeledDag& dag, const PathCover& cover, const ForwardLinks& links) {
    if (!dag.labeled()) throw std::invalid_argument("lis_dag requires a labeled DAG");
    const int n = dag.node_count();

    int rank_count = 0;
    std::vector<int> rank = detail::dense_ranks(std::span<const Symbol>(dag.labels()).subspan(1), rank_count);
    rank.insert(rank.begin(), 0); // 1-based

    LastToReach l2r = last_to_reach(dag, cover); // membership reused for updates

    std::vector<RmqTree> trees(static_cast<std::size_t>(cover.path_count()), detail::lis_tree(rank_count));
    LisResult res;
    res.best_ending_at.assign(static_cast<std::size_t>(n) + 1, 1);
    res.best_ending_at[0] = 0; // padding slot
    std::vector<int> pred(static_cast<std::size_t>(n) + 1, -1);

    auto improve = [&](int v, int path) {
        const RmqEntry q = trees[static_cast<std::size_t>(path)].rmaxq(0, rank[static_cast<std::size_t>(v)] - 1);
        if (q.value + 1 > res.best_ending_at[static_cast<std::size_t>(v)]) {
            res.best_ending_at[static_cast<std::size_t>(v)] = q.value + 1;
            pred[static_cast<std::size_t>(v)] = static_cast<int>(q.payload);
        }
    };

    for (int u = 1; u <= n; ++u) {
        // Links pointing back at u itself must be answered before u's value
        // is written into the trees; the query range excludes equal labels
        // but the written value must already be final.
        for (const auto& [v, i] : links.links[static_cast<std::size_t>(u)])
            if (v == u) improve(v, i);
        for (const auto& [i, pos] : l2r.membership[static_cast<std::size_t>(u)])
            trees[static_cast<std::size_t>(i)].update(rank[static_cast<std::size_t>(u)],
                                                      res.best_ending_at[static_cast<std::size_t>(u)], u);
        for (const auto& [v, i] : links.links[static_cast<std::size_t>(u)])
            if (v != u) improve(v, i);
    }

    int best_node = 1;
    for (int v = 2; v <= n; ++v)
        if (res.best_ending_at[static_cast<std::size_t>(v)] > res.best_ending_at[static_cast<std::size_t>(best_node)])
            best_node = v;
    res.length = res.best_ending_at[static_cast<std::size_t>(best_node)];
    for (int v = best_node; v > 0; v = pred[static_cast<std::size_t>(v)]) res.witness.emplace_back(v, dag.label(v));
    std::reverse(res.witness.begin(), res.witness.end());
    return res;
}

// Oracle: enumerate every source-rooted path, tracking for each stack
// position the best increasing run ending there. Independent of the cover
// machinery.
inline std::vector<long long> brute_force_lis_ending_at(const LabeledDag& dag) {
    const int n = dag.node_count();
    if (n > 14) throw std::invalid_argument("brute_force_lis_ending_at is limited to 14 nodes");
    if (!dag.labeled()) throw std::invalid_argument("labeled DAG required");

    std::vector<long long> best(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Symbol> labels;
    std::vector<long long> ending;

    auto dfs = [&](auto&& self, int v) -> void {
        labels.push_back(dag.label(v));
        long long e = 1;
        for (std::size_t j = 0; j + 1 < labels.size(); ++j)
            if (labels[j] < labels.back()) e = std::max(e, ending[j] + 1);
        ending.push_back(e);
        best[static_cast<std::size_t>(v)] = std::max(best[static_cast<std::size_t>(v)], e);
        for (int w : dag.out_neighbors(v)) self(self, w);
        labels.pop_back();
        ending.pop_back();
    };
    for (int v = 1; v <= n; ++v)
        if (dag.in_neighbors(v).empty()) dfs(dfs, v);
    return best;
}

inline long long brute_force_lis_dag(const LabeledDag& dag) {
    auto per_node = brute_force_lis_ending_at(dag);
    long long best = 0;
    for (std::size_t v = 1; v < per_node.size(); ++v) best = std::max(best, per_node[v]);
    return best;
}

} // namespace dagchain
