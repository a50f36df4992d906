#pragma once

// Minimum path cover of a DAG in O(k|E|log|V|):
//   1. greedy cover of size K = O(k log|V|), each round picking the path
//      covering the most still-uncovered nodes;
//   2. route the cover as a feasible flow on the split graph (demand 1 on
//      every node's split edge);
//   3. shrink to a minimum flow with Ford-Fulkerson on the max-flow
//      instance with capacities flow(e) - demand(e); at most K - k
//      augmentations;
//   4. decompose the minimum flow into k source-to-sink paths.
//
// brute_force_width is the independent testing oracle: transitive closure
// plus maximum bipartite matching, width = |V| - matching.

#include <cassert>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "dagchain/graph.hpp"

namespace dagchain {

struct PathCover {
    std::vector<std::vector<int>> paths;
    std::vector<std::vector<int>> paths_of_node; // node -> ascending path indexes

    int path_count() const { return static_cast<int>(paths.size()); }

    static PathCover from_paths(int node_count, std::vector<std::vector<int>> paths) {
        PathCover cover;
        cover.paths = std::move(paths);
        cover.paths_of_node.assign(static_cast<std::size_t>(node_count) + 1, {});
        for (std::size_t i = 0; i < cover.paths.size(); ++i)
            for (int v : cover.paths[i]) cover.paths_of_node[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
        return cover;
    }
};

inline bool is_valid_cover(const LabeledDag& dag, const PathCover& cover) {
    std::vector<char> covered(static_cast<std::size_t>(dag.node_count()) + 1, 0);
    for (const auto& path : cover.paths) {
        if (path.empty()) return false;
        for (std::size_t i = 0; i < path.size(); ++i) {
            int v = path[i];
            if (v < 1 || v > dag.node_count()) return false;
            covered[static_cast<std::size_t>(v)] = 1;
            if (i > 0 && !dag.has_edge(path[i - 1], v)) return false;
        }
    }
    for (int v = 1; v <= dag.node_count(); ++v)
        if (!covered[static_cast<std::size_t>(v)]) return false;
    return true;
}

// Greedy approximation (set-cover style): repeatedly take a path covering
// the maximum number of uncovered nodes, found by the DP
//   u[v] = m[v] + max over out-neighbors u[w]
// in inverse topological order. Ties break toward the smallest node id.
inline PathCover greedy_path_cover(const LabeledDag& dag) {
    const int n = dag.node_count();
    std::vector<char> uncovered(static_cast<std::size_t>(n) + 1, 1);
    std::vector<long long> gain(static_cast<std::size_t>(n) + 1, 0);
    int remaining = n;

    std::vector<std::vector<int>> paths;
    while (remaining > 0) {
        for (int v = n; v >= 1; --v) {
            long long best = 0;
            for (int w : dag.out_neighbors(v)) best = std::max(best, gain[static_cast<std::size_t>(w)]);
            gain[static_cast<std::size_t>(v)] = uncovered[static_cast<std::size_t>(v)] + best;
        }
        int start = 1;
        for (int v = 2; v <= n; ++v)
            if (gain[static_cast<std::size_t>(v)] > gain[static_cast<std::size_t>(start)]) start = v;

        std::vector<int> path{start};
        int v = start;
        while (!dag.out_neighbors(v).empty()) {
            int next = -1;
            long long best = -1;
            for (int w : dag.out_neighbors(v))
                if (gain[static_cast<std::size_t>(w)] > best) {
                    best = gain[static_cast<std::size_t>(w)];
                    next = w;
                }
            path.push_back(next);
            v = next;
        }
        for (int u : path)
            if (uncovered[static_cast<std::size_t>(u)]) {
                uncovered[static_cast<std::size_t>(u)] = 0;
                --remaining;
            }
        paths.push_back(std::move(path));
    }
    return PathCover::from_paths(n, std::move(paths));
}

// Split graph G*: every DAG node v becomes v- -> v+ with demand 1; a global
// source feeds every v- and every v+ feeds the global sink.
struct FlowNetwork {
    struct Arc {
        int from, to;
        int demand;
        long long flow;
    };

    int dag_nodes = 0;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out_arcs; // split-graph node -> arc indexes

    static int source() { return 0; }
    static int sink() { return 1; }
    static int node_in(int v) { return 2 * v; }
    static int node_out(int v) { return 2 * v + 1; }
    int split_node_count() const { return 2 * dag_nodes + 2; }

    long long value() const {
        long long total = 0;
        for (int e : out_arcs[static_cast<std::size_t>(source())]) total += arcs[static_cast<std::size_t>(e)].flow;
        return total;
    }

    int arc_index(int from, int to) const {
        auto it = lookup_.find(key(from, to));
        return it == lookup_.end() ? -1 : it->second;
    }

    void add_arc(int from, int to, int demand) {
        lookup_[key(from, to)] = static_cast<int>(arcs.size());
        out_arcs[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back(Arc{from, to, demand, 0});
    }

    bool feasible() const {
        for (const auto& a : arcs)
            if (a.flow < a.demand) return false;
        std::vector<long long> balance(static_cast<std::size_t>(split_node_count()), 0);
        for (const auto& a : arcs) {
            balance[static_cast<std::size_t>(a.from)] -= a.flow;
            balance[static_cast<std::size_t>(a.to)] += a.flow;
        }
        for (int x = 2; x < split_node_count(); ++x)
            if (balance[static_cast<std::size_t>(x)] != 0) return false;
        return true;
    }

private:
    static long long key(int from, int to) { return static_cast<long long>(from) << 32 | static_cast<unsigned>(to); }
    std::unordered_map<long long, int> lookup_;
};

inline FlowNetwork build_flow_from_cover(const LabeledDag& dag, const PathCover& cover) {
    FlowNetwork net;
    net.dag_nodes = dag.node_count();
    net.out_arcs.assign(static_cast<std::size_t>(net.split_node_count()), {});
    for (int v = 1; v <= dag.node_count(); ++v) {
        net.add_arc(FlowNetwork::source(), FlowNetwork::node_in(v), 0);
        net.add_arc(FlowNetwork::node_in(v), FlowNetwork::node_out(v), 1);
        net.add_arc(FlowNetwork::node_out(v), FlowNetwork::sink(), 0);
    }
    for (const auto& [u, v] : dag.edges()) net.add_arc(FlowNetwork::node_out(u), FlowNetwork::node_in(v), 0);

    auto push = [&net](int from, int to) {
        int e = net.arc_index(from, to);
        assert(e >= 0);
        net.arcs[static_cast<std::size_t>(e)].flow += 1;
    };
    for (const auto& path : cover.paths) {
        push(FlowNetwork::source(), FlowNetwork::node_in(path.front()));
        for (std::size_t i = 0; i < path.size(); ++i) {
            push(FlowNetwork::node_in(path[i]), FlowNetwork::node_out(path[i]));
            if (i + 1 < path.size()) push(FlowNetwork::node_out(path[i]), FlowNetwork::node_in(path[i + 1]));
        }
        push(FlowNetwork::node_out(path.back()), FlowNetwork::sink());
    }
    return net;
}

// Shrinking by Edmonds-Karp: maximum flow where each arc may give back
// flow(e) - demand(e), and each reverse arc is unbounded (edge capacities
// in the minimum flow instance are infinite, so flow may be rerouted
// upward elsewhere while it is withdrawn here). Subtracting the net pushed
// amounts yields a feasible flow of minimum value.
inline FlowNetwork shrink_to_minimum(FlowNetwork net, int* augmentations = nullptr) {
    if (!net.feasible()) throw std::invalid_argument("shrink_to_minimum requires a feasible input flow");

    constexpr long long kUnbounded = 1LL << 50;
    const int nodes = net.split_node_count();
    struct Res {
        int to;
        long long cap;
        int pair;
    };
    std::vector<Res> res;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(nodes));
    std::vector<int> forward_of(net.arcs.size());
    for (std::size_t e = 0; e < net.arcs.size(); ++e) {
        const auto& a = net.arcs[e];
        forward_of[e] = static_cast<int>(res.size());
        out[static_cast<std::size_t>(a.from)].push_back(static_cast<int>(res.size()));
        res.push_back(Res{a.to, a.flow - a.demand, static_cast<int>(res.size()) + 1});
        out[static_cast<std::size_t>(a.to)].push_back(static_cast<int>(res.size()));
        res.push_back(Res{a.from, kUnbounded, static_cast<int>(res.size()) - 1});
    }

    int rounds = 0;
    std::vector<int> pred_arc(static_cast<std::size_t>(nodes));
    while (true) {
        std::fill(pred_arc.begin(), pred_arc.end(), -1);
        pred_arc[static_cast<std::size_t>(FlowNetwork::source())] = -2;
        std::deque<int> queue{FlowNetwork::source()};
        while (!queue.empty() && pred_arc[static_cast<std::size_t>(FlowNetwork::sink())] == -1) {
            int x = queue.front();
            queue.pop_front();
            for (int r : out[static_cast<std::size_t>(x)]) {
                if (res[static_cast<std::size_t>(r)].cap <= 0) continue;
                int y = res[static_cast<std::size_t>(r)].to;
                if (pred_arc[static_cast<std::size_t>(y)] != -1) continue;
                pred_arc[static_cast<std::size_t>(y)] = r;
                queue.push_back(y);
            }
        }
        if (pred_arc[static_cast<std::size_t>(FlowNetwork::sink())] == -1) break;

        long long bottleneck = std::numeric_limits<long long>::max();
        for (int x = FlowNetwork::sink(); x != FlowNetwork::source();) {
            int r = pred_arc[static_cast<std::size_t>(x)];
            bottleneck = std::min(bottleneck, res[static_cast<std::size_t>(r)].cap);
            x = res[static_cast<std::size_t>(res[static_cast<std::size_t>(r)].pair)].to;
        }
        for (int x = FlowNetwork::sink(); x != FlowNetwork::source();) {
            int r = pred_arc[static_cast<std::size_t>(x)];
            res[static_cast<std::size_t>(r)].cap -= bottleneck;
            res[static_cast<std::size_t>(res[static_cast<std::size_t>(r)].pair)].cap += bottleneck;
            x = res[static_cast<std::size_t>(res[static_cast<std::size_t>(r)].pair)].to;
        }
        ++rounds;
    }
    if (augmentations) *augmentations = rounds;

    for (std::size_t e = 0; e < net.arcs.size(); ++e) {
        auto& a = net.arcs[e];
        const long long pushed = (a.flow - a.demand) - res[static_cast<std::size_t>(forward_of[e])].cap;
        a.flow -= pushed;
    }
    assert(net.feasible());
    return net;
}

// Walks one unit of flow source -> sink repeatedly, preferring the smallest
// original node id and taking the sink last. Every split edge carries at
// least one unit, so the paths cover all nodes.
inline PathCover decompose_flow(const FlowNetwork& net) {
    std::vector<long long> flow(net.arcs.size());
    for (std::size_t e = 0; e < net.arcs.size(); ++e) flow[e] = net.arcs[e].flow;

    auto sorted_out = net.out_arcs;
    for (auto& row : sorted_out)
        std::sort(row.begin(), row.end(), [&net](int a, int b) {
            int ta = net.arcs[static_cast<std::size_t>(a)].to;
            int tb = net.arcs[static_cast<std::size_t>(b)].to;
            if ((ta == FlowNetwork::sink()) != (tb == FlowNetwork::sink())) return tb == FlowNetwork::sink();
            return ta < tb;
        });

    const long long value = net.value();
    std::vector<std::vector<int>> paths;
    for (long long unit = 0; unit < value; ++unit) {
        std::vector<int> path;
        int x = FlowNetwork::source();
        while (x != FlowNetwork::sink()) {
            int chosen = -1;
            for (int e : sorted_out[static_cast<std::size_t>(x)])
                if (flow[static_cast<std::size_t>(e)] > 0) {
                    chosen = e;
                    break;
                }
            if (chosen < 0) throw std::logic_error("flow decomposition stuck: conservation violated");
            flow[static_cast<std::size_t>(chosen)] -= 1;
            x = net.arcs[static_cast<std::size_t>(chosen)].to;
            if (x >= 2 && x % 2 == 1) path.push_back(x / 2); // arrived at v+, record v
        }
        paths.push_back(std::move(path));
    }
    return PathCover::from_paths(net.dag_nodes, std::move(paths));
}

inline PathCover minimum_path_cover(const LabeledDag& dag) {
    PathCover greedy = greedy_path_cover(dag);
    FlowNetwork net = shrink_to_minimum(build_flow_from_cover(dag, greedy));
    return decompose_flow(net);
}

// Exact width oracle: strict transitive closure, then maximum bipartite
// matching on the comparability pairs (Kuhn's algorithm);
// width = |V| - matching.
inline int brute_force_width(const LabeledDag& dag) {
    const int n = dag.node_count();
    if (n > 200) throw std::invalid_argument("brute_force_width is limited to 200 nodes");

    std::vector<std::vector<char>> reach(static_cast<std::size_t>(n) + 1,
                                         std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    for (int v = n; v >= 1; --v) {
        for (int w : dag.out_neighbors(v)) {
            reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = 1;
            for (int t = 1; t <= n; ++t)
                if (reach[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)])
                    reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] = 1;
        }
    }

    std::vector<int> match_right(static_cast<std::size_t>(n) + 1, 0); // right node -> matched left node
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    auto augment = [&](auto&& self, int u) -> bool {
        for (int v = 1; v <= n; ++v) {
            if (!reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)])
                continue;
            seen[static_cast<std::size_t>(v)] = 1;
            if (match_right[static_cast<std::size_t>(v)] == 0 || self(self, match_right[static_cast<std::size_t>(v)])) {
                match_right[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };

    int matching = 0;
    for (int u = 1; u <= n; ++u) {
        std::fill(seen.begin(), seen.end(), 0);
        if (augment(augment, u)) ++matching;
    }
    return n - matching;
}

} // namespace dagchain
