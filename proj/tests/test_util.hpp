#pragma once

// Shared helpers for the unit and acceptance suites: small random instance
// generators and DFS-based ground truths, all independent of the path cover
// machinery they are used to check.

#include <utility>
#include <vector>

#include "dagchain/chain.hpp"
#include "dagchain/graph.hpp"
#include "dagchain/random.hpp"

namespace testutil {

using dagchain::Anchor;
using dagchain::Digraph;
using dagchain::Edge;
using dagchain::LabeledDag;
using dagchain::Rng;
using dagchain::SeqAnchor;
using dagchain::Symbol;

inline LabeledDag random_dag(Rng& rng, int max_nodes, double edge_prob, int alphabet) {
    const int n = static_cast<int>(rng.uniform(1, max_nodes));
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.chance(edge_prob)) edges.emplace_back(u, v);
    std::vector<Symbol> labels;
    if (alphabet > 0) {
        labels.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 1; v <= n; ++v) labels[static_cast<std::size_t>(v)] = rng.uniform(0, alphabet - 1);
    }
    return LabeledDag::create(n, std::move(edges), std::move(labels));
}

inline Digraph random_digraph(Rng& rng, int max_nodes, double edge_prob) {
    Digraph g;
    g.node_count = static_cast<int>(rng.uniform(1, max_nodes));
    for (int u = 1; u <= g.node_count; ++u)
        for (int v = 1; v <= g.node_count; ++v)
            if (u != v && rng.chance(edge_prob)) g.edges.emplace_back(u, v);
    return g;
}

// reach[x][y] including the empty path (x reaches itself).
inline std::vector<std::vector<char>> dfs_reachability(const Digraph& g) {
    const int n = g.node_count;
    auto out = dagchain::out_adjacency(n, g.edges);
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(n) + 1,
                                         std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    for (int s = 1; s <= n; ++s) {
        std::vector<int> stack{s};
        reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : out[static_cast<std::size_t>(v)])
                if (!reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)]) {
                    reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    return reach;
}

inline std::vector<std::vector<char>> dfs_reachability(const LabeledDag& dag) {
    Digraph g;
    g.node_count = dag.node_count();
    g.edges = dag.edges();
    return dfs_reachability(g);
}

// Random anchors whose paths are genuine walks of the DAG.
inline std::vector<Anchor> random_dag_anchors(Rng& rng, const LabeledDag& dag, int count, long long max_pos,
                                              int max_path_len = 3) {
    std::vector<Anchor> anchors;
    for (int t = 0; t < count; ++t) {
        Anchor a;
        int v = static_cast<int>(rng.uniform(1, dag.node_count()));
        a.path.push_back(v);
        const int len = static_cast<int>(rng.uniform(1, max_path_len));
        while (static_cast<int>(a.path.size()) < len && !dag.out_neighbors(v).empty()) {
            const auto& out = dag.out_neighbors(v);
            v = out[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(out.size()) - 1))];
            a.path.push_back(v);
        }
        a.c = rng.uniform(1, max_pos);
        a.d = rng.uniform(a.c, max_pos);
        anchors.push_back(std::move(a));
    }
    return anchors;
}

inline std::vector<SeqAnchor> random_seq_anchors(Rng& rng, int count, long long max_pos) {
    std::vector<SeqAnchor> anchors;
    for (int t = 0; t < count; ++t) {
        SeqAnchor a;
        a.x = rng.uniform(1, max_pos);
        a.y = rng.uniform(a.x, max_pos);
        a.c = rng.uniform(1, max_pos);
        a.d = rng.uniform(a.c, max_pos);
        anchors.push_back(a);
    }
    return anchors;
}

// Checks the traceback chain of a DAG chaining run: precedence per variant
// and recomputed ordered coverage.
inline bool valid_dag_chain(const LabeledDag& dag, std::span<const Anchor> anchors,
                            const dagchain::ChainResult& res, bool allow_path_overlaps) {
    if (res.chain.empty()) return res.coverage == 0;
    auto reach = dfs_reachability(dag);
    std::vector<std::pair<long long, long long>> intervals;
    for (std::size_t t = 0; t < res.chain.size(); ++t) {
        const Anchor& cur = anchors[static_cast<std::size_t>(res.chain[t])];
        intervals.emplace_back(cur.c, cur.d);
        if (t == 0) continue;
        const Anchor& prev = anchors[static_cast<std::size_t>(res.chain[t - 1])];
        if (prev.d >= cur.d) return false;
        const int pe = prev.path.back(), cs = cur.path.front();
        const bool connected = pe != cs && reach[static_cast<std::size_t>(pe)][static_cast<std::size_t>(cs)];
        bool ok = connected;
        if (allow_path_overlaps && !ok)
            ok = dagchain::detail::suffix_prefix_overlap(prev.path, cur.path);
        if (!ok) return false;
    }
    return dagchain::ordered_coverage(std::move(intervals)) == res.coverage;
}

inline bool valid_seq_chain(std::span<const SeqAnchor> anchors, const dagchain::ChainResult& res) {
    if (res.chain.empty()) return res.coverage == 0;
    std::vector<std::pair<long long, long long>> intervals;
    for (std::size_t t = 0; t < res.chain.size(); ++t) {
        const SeqAnchor& cur = anchors[static_cast<std::size_t>(res.chain[t])];
        intervals.emplace_back(cur.c, cur.d);
        if (t == 0) continue;
        const SeqAnchor& prev = anchors[static_cast<std::size_t>(res.chain[t - 1])];
        if (prev.y >= cur.y || prev.d >= cur.d) return false;
    }
    return dagchain::ordered_coverage(std::move(intervals)) == res.coverage;
}

} // namespace testutil
