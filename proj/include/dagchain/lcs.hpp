#pragma once

// Longest common subsequence between a labeled DAG and a sequence S.
// The per-path trees are keyed by positions of S; a match (v, j) improves
// from the best score at a strictly earlier position among nodes that
// reach v.

#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "dagchain/graph.hpp"
#include "dagchain/mpc.hpp"
#include "dagchain/reach.hpp"
#include "dagchain/rmq.hpp"

namespace dagchain {

struct RemappedInstance {
    LabeledDag dag;
    std::vector<Symbol> seq;
};

// Order-preserving rank remap against the symbols of S: symbols of S become
// their rank among S's distinct symbols, node labels absent from S become
// |S|+1 and can never match.
inline RemappedInstance remap_alphabet(const LabeledDag& dag, std::span<const Symbol> s) {
    if (!dag.labeled()) throw std::invalid_argument("remap_alphabet requires a labeled DAG");
    std::vector<Symbol> distinct(s.begin(), s.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    auto rank_of = [&](Symbol c) -> Symbol {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), c);
        if (it == distinct.end() || *it != c) return static_cast<Symbol>(s.size()) + 1;
        return static_cast<Symbol>(it - distinct.begin()) + 1;
    };

    std::vector<Symbol> seq(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) seq[j] = rank_of(s[j]);
    std::vector<Symbol> labels(static_cast<std::size_t>(dag.node_count()) + 1, 0);
    for (int v = 1; v <= dag.node_count(); ++v) labels[static_cast<std::size_t>(v)] = rank_of(dag.label(v));
    return RemappedInstance{LabeledDag::create(dag.node_count(), dag.edges(), std::move(labels)), std::move(seq)};
}

// All pairs (v, j) with label(v) = S[j], grouped per node with ascending j.
struct MatchSet {
    std::vector<std::pair<int, int>> matches;        // (node, 1-based position)
    std::vector<std::vector<int>> match_ids_of_node; // node -> indexes into matches

    static MatchSet build(const LabeledDag& dag, std::span<const Symbol> s) {
        if (!dag.labeled()) throw std::invalid_argument("match set requires a labeled DAG");
        std::unordered_map<Symbol, std::vector<int>> positions;
        for (std::size_t j = 0; j < s.size(); ++j) positions[s[j]].push_back(static_cast<int>(j) + 1);

        MatchSet m;
        m.match_ids_of_node.assign(static_cast<std::size_t>(dag.node_count()) + 1, {});
        for (int v = 1; v <= dag.node_count(); ++v) {
            auto it = positions.find(dag.label(v));
            if (it == positions.end()) continue;
            for (int j : it->second) {
                m.match_ids_of_node[static_cast<std::size_t>(v)].push_back(static_cast<int>(m.matches.size()));
                m.matches.emplace_back(v, j);
            }
        }
        return m;
    }
};

struct LcsResult {
    long long length = 0;
    std::vector<std::pair<int, int>> witness; // (node, position), chain order
    std::vector<std::pair<int, int>> matches; // the match set that was scored
    std::vector<long long> scores;            // parallel to matches

    long long score_at(int v, int j) const {
        for (std::size_t m = 0; m < matches.size(); ++m)
            if (matches[m] == std::make_pair(v, j)) return scores[m];
        return 0;
    }
};

inline LcsResult lcs_dag_sequence(const LabeledDag& dag, std::span<const Symbol> s, const PathCover& cover,
                                  const ForwardLinks& links) {
    if (!dag.labeled()) throw std::invalid_argument("lcs_dag_sequence requires a labeled DAG");
    const MatchSet matches = MatchSet::build(dag, s);
    LastToReach l2r = last_to_reach(dag, cover);

    std::vector<long long> keys(s.size() + 1);
    for (std::size_t k = 0; k <= s.size(); ++k) keys[k] = static_cast<long long>(k);
    RmqTree blank = RmqTree::with_keys(keys);
    blank.update(0, 0, -1);
    std::vector<RmqTree> trees(static_cast<std::size_t>(cover.path_count()), blank);

    LcsResult res;
    res.matches = matches.matches;
    res.scores.assign(matches.matches.size(), 0);
    std::vector<int> pred(matches.matches.size(), -1);

    auto improve = [&](int v, int path) {
        for (int mid : matches.match_ids_of_node[static_cast<std::size_t>(v)]) {
            const int j = matches.matches[static_cast<std::size_t>(mid)].second;
            const RmqEntry q = trees[static_cast<std::size_t>(path)].rmaxq(0, j - 1);
            if (q.value + 1 > res.scores[static_cast<std::size_t>(mid)]) {
                res.scores[static_cast<std::size_t>(mid)] = q.value + 1;
                pred[static_cast<std::size_t>(mid)] = static_cast<int>(q.payload);
            }
        }
    };

    for (int u = 1; u <= dag.node_count(); ++u) {
        for (const auto& [v, i] : links.links[static_cast<std::size_t>(u)])
            if (v == u) improve(v, i);
        for (const auto& [i, pos] : l2r.membership[static_cast<std::size_t>(u)])
            for (int mid : matches.match_ids_of_node[static_cast<std::size_t>(u)])
                trees[static_cast<std::size_t>(i)].update(matches.matches[static_cast<std::size_t>(mid)].second,
                                                          res.scores[static_cast<std::size_t>(mid)], mid);
        for (const auto& [v, i] : links.links[static_cast<std::size_t>(u)])
            if (v != u) improve(v, i);
    }

    int best = -1;
    for (std::size_t m = 0; m < res.scores.size(); ++m)
        if (best < 0 || res.scores[m] > res.scores[static_cast<std::size_t>(best)]) best = static_cast<int>(m);
    if (best >= 0) {
        res.length = res.scores[static_cast<std::size_t>(best)];
        for (int m = best; m >= 0; m = pred[static_cast<std::size_t>(m)]) res.witness.push_back(res.matches[static_cast<std::size_t>(m)]);
        std::reverse(res.witness.begin(), res.witness.end());
    }
    return res;
}

// Classic quadratic LCS, the oracle for the sparse algorithm.
inline long long lcs_sequences(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.size() > 10000 || b.size() > 10000) throw std::invalid_argument("lcs_sequences is limited to 1e4 symbols");
    std::vector<long long> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

inline long long brute_force_lcs_dag(const LabeledDag& dag, std::span<const Symbol> s) {
    const int n = dag.node_count();
    if (n > 14) throw std::invalid_argument("brute_force_lcs_dag is limited to 14 nodes");
    if (!dag.labeled()) throw std::invalid_argument("labeled DAG required");

    long long best = 0;
    std::vector<Symbol> labels;
    auto dfs = [&](auto&& self, int v) -> void {
        labels.push_back(dag.label(v));
        if (dag.out_neighbors(v).empty())
            best = std::max(best, lcs_sequences(labels, s));
        for (int w : dag.out_neighbors(v)) self(self, w);
        labels.pop_back();
    };
    for (int v = 1; v <= n; ++v)
        if (dag.in_neighbors(v).empty()) dfs(dfs, v);
    return best;
}

} // namespace dagchain
