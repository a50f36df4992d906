#pragma once

// Co-linear chaining: pick a subset of anchors whose positions advance in
// both inputs and maximize the number of covered read positions.
//
// Variants, all sharing the case (a)/(b) scoring
//   a: predecessor ends before this anchor starts, gain d-c+1
//   b: predecessor overlaps the read interval,     gain d-d'
// - chain_sequences:        both inputs are sequences, O(N log N)
// - chain_dag_naive:        DAG input, reverse DFS per anchor, O((V+E)N)
// - chain_dag_mpc:          DAG input, per-cover-path trees driven by
//                           forward propagation links, O(kN log N) after
//                           the cover is built
// - chain_dag_with_overlaps: additionally chains across suffix-prefix path
//                           overlaps, fed by a precomputed overlap table
//
// C[j] is the best coverage of the read prefix ending at anchor j's d,
// using anchor j last. Scores of anchors whose read interval is included
// in another may come out too low; the reported optimum is unaffected.

#include <cassert>
#include <deque>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dagchain/graph.hpp"
#include "dagchain/mpc.hpp"
#include "dagchain/reach.hpp"
#include "dagchain/rmq.hpp"

namespace dagchain {

// Anchor between a DAG and a read: the label of `path` is taken to match
// read positions [c..d]. The match itself is trusted, not re-checked.
struct Anchor {
    std::vector<int> path;
    long long c = 0, d = 0;
};

// Anchor between two sequences: [x..y] in the target, [c..d] in the read.
struct SeqAnchor {
    long long x = 0, y = 0;
    long long c = 0, d = 0;
};

struct ChainResult {
    long long coverage = 0;
    int best_index = -1;            // original anchor index attaining the optimum
    std::vector<long long> scores;  // C[], original anchor order
    std::vector<int> chain;         // original anchor indexes, chain order
};

// |union of the closed integer intervals|.
inline long long ordered_coverage(std::vector<std::pair<long long, long long>> intervals) {
    std::sort(intervals.begin(), intervals.end());
    long long total = 0, upto = std::numeric_limits<long long>::min();
    for (const auto& [c, d] : intervals) {
        if (c > upto) {
            total += d - c + 1;
            upto = d;
        } else if (d > upto) {
            total += d - upto;
            upto = d;
        }
    }
    return total;
}

namespace detail {

struct ChainState {
    std::vector<long long> score; // canonical order
    std::vector<int> pred;        // canonical index or -1
    std::vector<char> link_case;  // 'a' or 'b'

    void init(std::size_t n) {
        score.assign(n, 0);
        pred.assign(n, -1);
        link_case.assign(n, 'a');
    }

    void improve(std::size_t j, long long cand, long long who, char c) {
        if (cand > score[j]) {
            score[j] = cand;
            pred[j] = static_cast<int>(who);
            link_case[j] = c;
        }
    }
};

// Shared reporting: the optimum is the earliest canonical argmax, and the
// traceback drops case (b) links of zero gain (equal d); those arise from
// the inclusive range query and never change the optimal value.
inline ChainResult finalize_chain(const ChainState& st, const std::vector<int>& canon_to_orig,
                                  const std::vector<long long>& d_canon) {
    ChainResult out;
    out.scores.assign(canon_to_orig.size(), 0);
    if (canon_to_orig.empty()) return out;

    std::size_t best = 0;
    for (std::size_t j = 0; j < st.score.size(); ++j) {
        out.scores[static_cast<std::size_t>(canon_to_orig[j])] = st.score[j];
        if (st.score[j] > st.score[best]) best = j;
    }
    out.coverage = st.score[best];
    out.best_index = canon_to_orig[best];

    std::vector<int> rev;
    for (int cur = static_cast<int>(best); cur >= 0; cur = st.pred[static_cast<std::size_t>(cur)]) {
        const int p = st.pred[static_cast<std::size_t>(cur)];
        const bool zero_gain = p >= 0 && st.link_case[static_cast<std::size_t>(cur)] == 'b' &&
                               d_canon[static_cast<std::size_t>(p)] == d_canon[static_cast<std::size_t>(cur)];
        if (!zero_gain) rev.push_back(cur);
    }
    out.chain.reserve(rev.size());
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) out.chain.push_back(canon_to_orig[static_cast<std::size_t>(*it)]);
    return out;
}

inline std::vector<long long> tree_keys(std::span<const long long> ds) {
    std::vector<long long> keys(ds.begin(), ds.end());
    keys.push_back(0);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

inline void validate_dag_anchors(const LabeledDag& dag, std::span<const Anchor> anchors) {
    for (const auto& a : anchors) {
        if (a.path.empty()) throw std::invalid_argument("anchor with empty path");
        if (a.c < 0 || a.c > a.d) throw std::invalid_argument("anchor interval endpoints out of order");
        for (std::size_t i = 0; i < a.path.size(); ++i) {
            if (a.path[i] < 1 || a.path[i] > dag.node_count())
                throw std::invalid_argument("anchor path node out of range");
            if (i > 0 && !dag.has_edge(a.path[i - 1], a.path[i]))
                throw std::invalid_argument("anchor path is not a path of the graph");
        }
    }
}

// Fixed processing order: endpoint id, then startpoint id, then d, then
// input position.
inline std::vector<int> canonical_dag_order(std::span<const Anchor> anchors) {
    std::vector<int> idx(anchors.size());
    for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = static_cast<int>(j);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const Anchor &A = anchors[static_cast<std::size_t>(a)], &B = anchors[static_cast<std::size_t>(b)];
        if (A.path.back() != B.path.back()) return A.path.back() < B.path.back();
        if (A.path.front() != B.path.front()) return A.path.front() < B.path.front();
        if (A.d != B.d) return A.d < B.d;
        return a < b;
    });
    return idx;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Two sequences (the classic algorithm, reused as the k = 1 degenerate case).
// Anchors with equal y are processed as one batch: they may not chain off
// each other, so all their queries run before any of their tree updates.
// ---------------------------------------------------------------------------
inline ChainResult chain_sequences(std::span<const SeqAnchor> anchors) {
    for (const auto& a : anchors) {
        if (a.c < 0 || a.c > a.d) throw std::invalid_argument("anchor interval endpoints out of order");
        if (a.x > a.y) throw std::invalid_argument("anchor interval endpoints out of order");
    }

    std::vector<int> canon(anchors.size());
    for (std::size_t j = 0; j < canon.size(); ++j) canon[j] = static_cast<int>(j);
    std::sort(canon.begin(), canon.end(), [&](int a, int b) {
        const SeqAnchor &A = anchors[static_cast<std::size_t>(a)], &B = anchors[static_cast<std::size_t>(b)];
        if (A.y != B.y) return A.y < B.y;
        if (A.d != B.d) return A.d < B.d;
        return a < b;
    });

    std::vector<long long> d_canon(anchors.size());
    for (std::size_t j = 0; j < canon.size(); ++j) d_canon[j] = anchors[static_cast<std::size_t>(canon[j])].d;

    auto keys = detail::tree_keys(d_canon);
    RmqTree cover_tree = RmqTree::with_keys(keys);   // holds C[j'] keyed by d'
    RmqTree overlap_tree = RmqTree::with_keys(keys); // holds C[j'] - d' keyed by d'
    cover_tree.update(0, 0, -1);
    overlap_tree.update(0, 0, -1);

    detail::ChainState st;
    st.init(anchors.size());

    std::size_t group_start = 0;
    while (group_start < canon.size()) {
        std::size_t group_end = group_start;
        const long long y = anchors[static_cast<std::size_t>(canon[group_start])].y;
        while (group_end < canon.size() && anchors[static_cast<std::size_t>(canon[group_end])].y == y) ++group_end;

        for (std::size_t j = group_start; j < group_end; ++j) {
            const SeqAnchor& a = anchors[static_cast<std::size_t>(canon[j])];
            st.score[j] = a.d - a.c + 1;
            const RmqEntry qa = cover_tree.rmaxq(0, a.c - 1);
            st.improve(j, sat_add(qa.value, a.d - a.c + 1), qa.payload, 'a');
            const RmqEntry qb = overlap_tree.rmaxq(a.c, a.d);
            st.improve(j, sat_add(qb.value, a.d), qb.payload, 'b');
        }
        for (std::size_t j = group_start; j < group_end; ++j) {
            const SeqAnchor& a = anchors[static_cast<std::size_t>(canon[j])];
            cover_tree.update(a.d, st.score[j], static_cast<long long>(j));
            overlap_tree.update(a.d, st.score[j] - a.d, static_cast<long long>(j));
        }
        group_start = group_end;
    }
    return detail::finalize_chain(st, canon, d_canon);
}

// ---------------------------------------------------------------------------
// Naive DAG algorithm: anchors sorted by path endpoint, one reverse DFS per
// anchor; every anchor ending at a proper ancestor of the startpoint is a
// candidate predecessor.
// ---------------------------------------------------------------------------
inline ChainResult chain_dag_naive(const LabeledDag& dag, std::span<const Anchor> anchors) {
    detail::validate_dag_anchors(dag, anchors);
    const std::vector<int> canon = detail::canonical_dag_order(anchors);
    std::vector<long long> d_canon(anchors.size());
    std::vector<std::vector<int>> end_bucket(static_cast<std::size_t>(dag.node_count()) + 1);
    for (std::size_t j = 0; j < canon.size(); ++j) {
        const Anchor& a = anchors[static_cast<std::size_t>(canon[j])];
        d_canon[j] = a.d;
        end_bucket[static_cast<std::size_t>(a.path.back())].push_back(static_cast<int>(j));
    }

    detail::ChainState st;
    st.init(anchors.size());

    std::vector<int> stamp(static_cast<std::size_t>(dag.node_count()) + 1, -1);
    std::vector<int> stack;
    for (std::size_t j = 0; j < canon.size(); ++j) {
        const Anchor& a = anchors[static_cast<std::size_t>(canon[j])];
        st.score[j] = a.d - a.c + 1;

        const int start = a.path.front();
        stack.assign(1, start);
        stamp[static_cast<std::size_t>(start)] = static_cast<int>(j);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            if (u != start) {
                for (int j2 : end_bucket[static_cast<std::size_t>(u)]) {
                    assert(static_cast<std::size_t>(j2) < j);
                    const Anchor& b = anchors[static_cast<std::size_t>(canon[static_cast<std::size_t>(j2)])];
                    if (b.d < a.c)
                        st.improve(j, st.score[static_cast<std::size_t>(j2)] + (a.d - a.c + 1), j2, 'a');
                    else if (b.d <= a.d)
                        st.improve(j, st.score[static_cast<std::size_t>(j2)] + (a.d - b.d), j2, 'b');
                }
            }
            for (int w : dag.in_neighbors(u))
                if (stamp[static_cast<std::size_t>(w)] != static_cast<int>(j)) {
                    stamp[static_cast<std::size_t>(w)] = static_cast<int>(j);
                    stack.push_back(w);
                }
        }
    }
    return detail::finalize_chain(st, canon, d_canon);
}

// ---------------------------------------------------------------------------
// Suffix-prefix path overlaps, detected with an Aho-Corasick automaton over
// the anchor paths. into[j] lists the anchors whose path overlaps a proper
// prefix of anchor j's path. Expected O(L + #overlap instances) where L is
// the total path length.
// ---------------------------------------------------------------------------
struct OverlapTable {
    std::vector<std::vector<int>> into; // original anchor indexes, ascending

    std::size_t pair_count() const {
        std::size_t t = 0;
        for (const auto& row : into) t += row.size();
        return t;
    }
};

inline OverlapTable precompute_overlaps(std::span<const Anchor> anchors) {
    struct Node {
        std::unordered_map<int, int> next;
        int fail = 0;
        int depth = 0;
        std::vector<int> through; // anchors whose path passes this prefix
    };
    std::vector<Node> trie(1);

    for (std::size_t j = 0; j < anchors.size(); ++j) {
        int cur = 0;
        for (int c : anchors[j].path) {
            auto it = trie[static_cast<std::size_t>(cur)].next.find(c);
            int nxt;
            if (it == trie[static_cast<std::size_t>(cur)].next.end()) {
                nxt = static_cast<int>(trie.size());
                const int depth = trie[static_cast<std::size_t>(cur)].depth + 1;
                trie[static_cast<std::size_t>(cur)].next.emplace(c, nxt);
                trie.push_back(Node{});
                trie.back().depth = depth;
            } else {
                nxt = it->second;
            }
            cur = nxt;
            trie[static_cast<std::size_t>(cur)].through.push_back(static_cast<int>(j));
        }
    }

    std::deque<int> queue;
    for (const auto& [c, s] : trie[0].next) queue.push_back(s);
    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        for (const auto& [c, t] : trie[static_cast<std::size_t>(s)].next) {
            int f = trie[static_cast<std::size_t>(s)].fail;
            while (true) {
                auto it = trie[static_cast<std::size_t>(f)].next.find(c);
                if (it != trie[static_cast<std::size_t>(f)].next.end() && it->second != t) {
                    trie[static_cast<std::size_t>(t)].fail = it->second;
                    break;
                }
                if (f == 0) {
                    trie[static_cast<std::size_t>(t)].fail = 0;
                    break;
                }
                f = trie[static_cast<std::size_t>(f)].fail;
            }
            queue.push_back(t);
        }
    }

    OverlapTable table;
    table.into.assign(anchors.size(), {});
    for (std::size_t j2 = 0; j2 < anchors.size(); ++j2) {
        int state = 0;
        for (int c : anchors[j2].path) {
            while (true) {
                auto it = trie[static_cast<std::size_t>(state)].next.find(c);
                if (it != trie[static_cast<std::size_t>(state)].next.end()) {
                    state = it->second;
                    break;
                }
                if (state == 0) break;
                state = trie[static_cast<std::size_t>(state)].fail;
            }
        }
        // Every pattern prefix that is a suffix of this whole path sits on
        // the failure chain of the final state.
        for (int s = state; s != 0; s = trie[static_cast<std::size_t>(s)].fail) {
            for (int j : trie[static_cast<std::size_t>(s)].through) {
                if (static_cast<std::size_t>(j) == j2) continue;
                if (anchors[static_cast<std::size_t>(j)].path.size() <= static_cast<std::size_t>(trie[static_cast<std::size_t>(s)].depth))
                    continue; // the other path would be fully contained
                table.into[static_cast<std::size_t>(j)].push_back(static_cast<int>(j2));
            }
        }
    }
    for (auto& row : table.into) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return table;
}

// ---------------------------------------------------------------------------
// MPC-based algorithm. Per node, in topological order:
//   1. answer forward links that point back at the node itself (an anchor
//      ending here must not chain into one starting here: the connecting
//      path would be empty);
//   2. fold in overlap predecessors of anchors ending here (overlap variant
//      only; their endpoints lie strictly earlier, so their scores are
//      final), then write the final scores into the trees of every cover
//      path through this node;
//   3. answer the remaining forward links.
// ---------------------------------------------------------------------------
namespace detail {
inline ChainResult chain_dag_mpc_impl(const LabeledDag& dag, const PathCover& cover, const ForwardLinks& links,
                                      std::span<const Anchor> anchors, const OverlapTable* overlaps) {
    validate_dag_anchors(dag, anchors);
    const std::vector<int> canon = canonical_dag_order(anchors);
    std::vector<int> orig_to_canon(anchors.size());
    for (std::size_t j = 0; j < canon.size(); ++j) orig_to_canon[static_cast<std::size_t>(canon[j])] = static_cast<int>(j);

    std::vector<long long> d_canon(anchors.size());
    std::vector<std::vector<int>> start_bucket(static_cast<std::size_t>(dag.node_count()) + 1);
    std::vector<std::vector<int>> end_bucket(static_cast<std::size_t>(dag.node_count()) + 1);
    for (std::size_t j = 0; j < canon.size(); ++j) {
        const Anchor& a = anchors[static_cast<std::size_t>(canon[j])];
        d_canon[j] = a.d;
        start_bucket[static_cast<std::size_t>(a.path.front())].push_back(static_cast<int>(j));
        end_bucket[static_cast<std::size_t>(a.path.back())].push_back(static_cast<int>(j));
    }

    auto keys = tree_keys(d_canon);
    RmqTree blank = RmqTree::with_keys(keys);
    blank.update(0, 0, -1);
    std::vector<RmqTree> cover_trees(static_cast<std::size_t>(cover.path_count()), blank);
    std::vector<RmqTree> overlap_trees(static_cast<std::size_t>(cover.path_count()), blank);

    ChainState st;
    st.init(anchors.size());
    for (std::size_t j = 0; j < canon.size(); ++j) {
        const Anchor& a = anchors[static_cast<std::size_t>(canon[j])];
        st.score[j] = a.d - a.c + 1;
    }

    auto query = [&](int j, int path) {
        const Anchor& a = anchors[static_cast<std::size_t>(canon[static_cast<std::size_t>(j)])];
        const RmqEntry qa = cover_trees[static_cast<std::size_t>(path)].rmaxq(0, a.c - 1);
        st.improve(static_cast<std::size_t>(j), sat_add(qa.value, a.d - a.c + 1), qa.payload, 'a');
        const RmqEntry qb = overlap_trees[static_cast<std::size_t>(path)].rmaxq(a.c, a.d);
        st.improve(static_cast<std::size_t>(j), sat_add(qb.value, a.d), qb.payload, 'b');
    };

    for (int v = 1; v <= dag.node_count(); ++v) {
        for (const auto& [w, i] : links.links[static_cast<std::size_t>(v)])
            if (w == v)
                for (int j : start_bucket[static_cast<std::size_t>(v)]) query(j, i);

        if (overlaps) {
            for (int j : end_bucket[static_cast<std::size_t>(v)]) {
                const Anchor& a = anchors[static_cast<std::size_t>(canon[static_cast<std::size_t>(j)])];
                for (int orig2 : overlaps->into[static_cast<std::size_t>(canon[static_cast<std::size_t>(j)])]) {
                    const int j2 = orig_to_canon[static_cast<std::size_t>(orig2)];
                    const long long d2 = d_canon[static_cast<std::size_t>(j2)];
                    if (d2 < a.c)
                        st.improve(static_cast<std::size_t>(j), st.score[static_cast<std::size_t>(j2)] + (a.d - a.c + 1), j2, 'a');
                    else if (d2 < a.d) // d strictly increases along a chain
                        st.improve(static_cast<std::size_t>(j), st.score[static_cast<std::size_t>(j2)] + (a.d - d2), j2, 'b');
                }
            }
        }

        for (int j : end_bucket[static_cast<std::size_t>(v)]) {
            const long long d = d_canon[static_cast<std::size_t>(j)];
            for (int i : cover.paths_of_node[static_cast<std::size_t>(v)]) {
                cover_trees[static_cast<std::size_t>(i)].update(d, st.score[static_cast<std::size_t>(j)], j);
                overlap_trees[static_cast<std::size_t>(i)].update(d, st.score[static_cast<std::size_t>(j)] - d, j);
            }
        }

        for (const auto& [w, i] : links.links[static_cast<std::size_t>(v)])
            if (w != v)
                for (int j : start_bucket[static_cast<std::size_t>(w)]) query(j, i);
    }
    return finalize_chain(st, canon, d_canon);
}
} // namespace detail

inline ChainResult chain_dag_mpc(const LabeledDag& dag, const PathCover& cover, const ForwardLinks& links,
                                 std::span<const Anchor> anchors) {
    return detail::chain_dag_mpc_impl(dag, cover, links, anchors, nullptr);
}

inline ChainResult chain_dag_with_overlaps(const LabeledDag& dag, const PathCover& cover, const ForwardLinks& links,
                                           std::span<const Anchor> anchors) {
    const OverlapTable overlaps = precompute_overlaps(anchors);
    return detail::chain_dag_mpc_impl(dag, cover, links, anchors, &overlaps);
}

// ---------------------------------------------------------------------------
// Subset-enumeration oracles. A valid chain has strictly increasing d, so
// every candidate subset is checked in ascending d order against the
// variant's precedence relation, and its coverage is recomputed from the
// definition.
// ---------------------------------------------------------------------------
namespace detail {
inline long long best_subset_coverage(std::size_t n, const std::vector<std::vector<char>>& precedes,
                                      const std::vector<long long>& c, const std::vector<long long>& d) {
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[static_cast<std::size_t>(a)] < d[static_cast<std::size_t>(b)]; });

    long long best = 0;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        std::vector<int> chain;
        for (int i : order)
            if (mask >> i & 1) chain.push_back(i);
        bool ok = true;
        std::vector<std::pair<long long, long long>> intervals;
        for (std::size_t t = 0; t < chain.size() && ok; ++t) {
            intervals.emplace_back(c[static_cast<std::size_t>(chain[t])], d[static_cast<std::size_t>(chain[t])]);
            if (t == 0) continue;
            if (d[static_cast<std::size_t>(chain[t - 1])] >= d[static_cast<std::size_t>(chain[t])]) ok = false;
            else if (!precedes[static_cast<std::size_t>(chain[t - 1])][static_cast<std::size_t>(chain[t])]) ok = false;
        }
        if (ok) best = std::max(best, ordered_coverage(std::move(intervals)));
    }
    return best;
}

inline bool suffix_prefix_overlap(const std::vector<int>& p1, const std::vector<int>& p2) {
    const std::size_t i = p1.size(), j = p2.size();
    const std::size_t k_lo = i + 2 > j ? i + 2 - j : 1; // overlap shorter than p2
    for (std::size_t k = std::max<std::size_t>(k_lo, 1); k <= i; ++k) {
        bool match = true;
        for (std::size_t t = k; t <= i && match; ++t) match = p1[t - 1] == p2[t - k];
        if (match) return true;
    }
    return false;
}
} // namespace detail

inline long long brute_force_chain_sequences(std::span<const SeqAnchor> anchors) {
    const std::size_t n = anchors.size();
    if (n > 20) throw std::invalid_argument("oracle limited to 20 anchors");
    std::vector<std::vector<char>> precedes(n, std::vector<char>(n, 0));
    std::vector<long long> c(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = anchors[i].c;
        d[i] = anchors[i].d;
        for (std::size_t j = 0; j < n; ++j)
            precedes[i][j] = anchors[i].y < anchors[j].y && anchors[i].d < anchors[j].d;
    }
    return detail::best_subset_coverage(n, precedes, c, d);
}

// variant: overlap-limited (allow_path_overlaps = false) or the general
// precedence with suffix-prefix overlaps (true).
inline long long brute_force_chain_dag(const LabeledDag& dag, std::span<const Anchor> anchors,
                                       bool allow_path_overlaps) {
    const std::size_t n = anchors.size();
    if (n > 20) throw std::invalid_argument("oracle limited to 20 anchors");
    detail::validate_dag_anchors(dag, anchors);

    // Strict reachability by DFS, the ground truth for "non-empty path".
    const int nodes = dag.node_count();
    std::vector<std::vector<char>> strict(static_cast<std::size_t>(nodes) + 1,
                                          std::vector<char>(static_cast<std::size_t>(nodes) + 1, 0));
    for (int v = nodes; v >= 1; --v)
        for (int w : dag.out_neighbors(v)) {
            strict[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = 1;
            for (int t = 1; t <= nodes; ++t)
                if (strict[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)])
                    strict[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] = 1;
        }

    std::vector<std::vector<char>> precedes(n, std::vector<char>(n, 0));
    std::vector<long long> c(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = anchors[i].c;
        d[i] = anchors[i].d;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& p1 = anchors[i].path;
            const auto& p2 = anchors[j].path;
            bool ok = strict[static_cast<std::size_t>(p1.back())][static_cast<std::size_t>(p2.front())];
            if (allow_path_overlaps) {
                if (ok) {
                    // Definition clause 1 also requires node-disjointness;
                    // with a non-empty connecting path it always holds.
                    std::vector<int> s1 = p1, s2 = p2;
                    std::sort(s1.begin(), s1.end());
                    std::sort(s2.begin(), s2.end());
                    std::vector<int> inter;
                    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(inter));
                    ok = inter.empty();
                }
                ok = ok || detail::suffix_prefix_overlap(p1, p2);
            }
            precedes[i][j] = ok && anchors[i].d < anchors[j].d;
        }
    return detail::best_subset_coverage(n, precedes, c, d);
}

// ---------------------------------------------------------------------------
// Anchor file format (TSV): per line, comma-separated path node ids, TAB,
// c, TAB, d. '#' starts a comment line.
// ---------------------------------------------------------------------------
inline std::vector<Anchor> parse_anchors(const std::string& text) {
    std::vector<Anchor> anchors;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;

        std::istringstream ls(line);
        std::string path_field;
        long long c = 0, d = 0;
        if (!std::getline(ls, path_field, '\t') || !(ls >> c >> d))
            throw detail::parse_error(line_no, "expected \"v1,v2,...<TAB>c<TAB>d\"");
        Anchor a;
        a.c = c;
        a.d = d;
        std::istringstream ps(path_field);
        std::string tok;
        while (std::getline(ps, tok, ',')) {
            if (tok.empty()) continue;
            a.path.push_back(std::stoi(tok));
        }
        if (a.path.empty()) throw detail::parse_error(line_no, "anchor with empty path");
        anchors.push_back(std::move(a));
    }
    return anchors;
}

inline std::string serialize_anchors(std::span<const Anchor> anchors) {
    std::ostringstream out;
    for (const auto& a : anchors) {
        for (std::size_t i = 0; i < a.path.size(); ++i) {
            if (i) out << ',';
            out << a.path[i];
        }
        out << '\t' << a.c << '\t' << a.d << '\n';
    }
    return out.str();
}

} // namespace dagchain
