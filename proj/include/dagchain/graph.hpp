#pragma once

// DAG representation, validation, parsing and synthetic instance generation.
//
// Node ids are 1-based everywhere and a valid LabeledDag is always numbered
// in topological order: every edge (u,v) satisfies u < v. Inputs that do not
// satisfy this are accepted by parse_dag and renumbered, with the renumbering
// map returned alongside so that externally supplied anchors can be remapped.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dagchain/random.hpp"

namespace dagchain {

using Symbol = long long;
using Edge = std::pair<int, int>;

// Arbitrary directed graph (cycles allowed). Used as parser output and as
// the input type of the reachability index.
struct Digraph {
    int node_count = 0;
    std::vector<Edge> edges;
    std::vector<Symbol> labels; // empty or one per node (index 1..node_count)

    bool labeled() const { return !labels.empty(); }
};

inline std::vector<std::vector<int>> out_adjacency(int node_count, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count) + 1);
    for (const auto& [u, v] : edges) adj[static_cast<std::size_t>(u)].push_back(v);
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

inline std::vector<std::vector<int>> in_adjacency(int node_count, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count) + 1);
    for (const auto& [u, v] : edges) adj[static_cast<std::size_t>(v)].push_back(u);
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

// Immutable after construction; safe to share across threads.
class LabeledDag {
public:
    // Validates and builds. Requires nodes numbered 1..node_count in a
    // topological order (u < v for every edge), no self loops, no duplicate
    // edges, and labels either absent or complete.
    static LabeledDag create(int node_count, std::vector<Edge> edges, std::vector<Symbol> labels = {}) {
        if (node_count < 1) throw std::invalid_argument("graph must have at least one node");
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& [u, v] = edges[i];
            if (u < 1 || u > node_count || v < 1 || v > node_count)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            if (u == v)
                throw std::invalid_argument("self loop at node " + std::to_string(u));
            if (u > v)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") violates the topological numbering");
            if (i > 0 && edges[i] == edges[i - 1])
                throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        if (!labels.empty() && labels.size() != static_cast<std::size_t>(node_count) + 1)
            throw std::invalid_argument("labels must cover every node exactly once");
        for (std::size_t v = 1; v < labels.size(); ++v)
            if (labels[v] < 0) throw std::invalid_argument("negative symbol code at node " + std::to_string(v));

        LabeledDag dag;
        dag.node_count_ = node_count;
        dag.edges_ = std::move(edges);
        dag.labels_ = std::move(labels);
        dag.out_ = out_adjacency(node_count, dag.edges_);
        dag.in_ = in_adjacency(node_count, dag.edges_);
        return dag;
    }

    int node_count() const { return node_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[static_cast<std::size_t>(v)]; }

    bool labeled() const { return !labels_.empty(); }
    Symbol label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    // Index 0 is unused padding.
    const std::vector<Symbol>& labels() const { return labels_; }

    bool has_edge(int u, int v) const {
        const auto& row = out_[static_cast<std::size_t>(u)];
        return std::binary_search(row.begin(), row.end(), v);
    }

private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<Symbol> labels_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

struct TopoOrder {
    std::vector<int> order; // order[i] = i-th node, i from 0
    std::vector<int> rank;  // rank[node] = position in order, 1-based nodes
};

struct TopoAttempt {
    bool is_dag = false;
    std::vector<int> order;
    Edge back_edge{0, 0}; // a witness edge on a cycle when !is_dag
};

// Kahn's algorithm, always expanding the smallest available node id.
inline TopoAttempt try_topological_order(int node_count, const std::vector<Edge>& edges) {
    std::vector<int> indeg(static_cast<std::size_t>(node_count) + 1, 0);
    auto out = out_adjacency(node_count, edges);
    for (const auto& [u, v] : edges) indeg[static_cast<std::size_t>(v)]++;

    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 1; v <= node_count; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);

    TopoAttempt res;
    res.order.reserve(static_cast<std::size_t>(node_count));
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        res.order.push_back(v);
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
    if (res.order.size() == static_cast<std::size_t>(node_count)) {
        res.is_dag = true;
        return res;
    }

    // Find a concrete back edge for the error message: DFS until an edge
    // closes into the current stack.
    std::vector<int> state(static_cast<std::size_t>(node_count) + 1, 0); // 0 new, 1 on stack, 2 done
    for (int start = 1; start <= node_count && !res.back_edge.first; ++start) {
        if (state[static_cast<std::size_t>(start)] != 0) continue;
        std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
        state[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            auto& [v, it] = stack.back();
            const auto& row = out[static_cast<std::size_t>(v)];
            if (it == row.size()) {
                state[static_cast<std::size_t>(v)] = 2;
                stack.pop_back();
                continue;
            }
            int w = row[it++];
            if (state[static_cast<std::size_t>(w)] == 1) {
                res.back_edge = {v, w};
                break;
            }
            if (state[static_cast<std::size_t>(w)] == 0) {
                state[static_cast<std::size_t>(w)] = 1;
                stack.emplace_back(w, 0);
            }
        }
    }
    return res;
}

inline TopoOrder topological_order(const LabeledDag& dag) {
    auto attempt = try_topological_order(dag.node_count(), dag.edges());
    TopoOrder topo;
    topo.order = std::move(attempt.order);
    topo.rank.assign(static_cast<std::size_t>(dag.node_count()) + 1, 0);
    for (int i = 0; i < dag.node_count(); ++i) topo.rank[static_cast<std::size_t>(topo.order[static_cast<std::size_t>(i)])] = i;
    return topo;
}

// ---------------------------------------------------------------------------
// Graph file format:
//   first line  "|V| |E|"
//   then |E| lines "u v"
//   then optionally |V| lines "node label" (non-negative integer codes)
// Lines starting with '#' are comments.
// ---------------------------------------------------------------------------

namespace detail {
inline bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

inline std::runtime_error parse_error(int line_no, const std::string& what) {
    return std::runtime_error("parse error at line " + std::to_string(line_no) + ": " + what);
}
} // namespace detail

inline Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    if (!detail::next_content_line(in, line, line_no))
        throw detail::parse_error(line_no, "missing header line \"|V| |E|\"");
    long long n = 0, m = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> n >> m) || n < 1 || m < 0)
            throw detail::parse_error(line_no, "expected \"|V| |E|\" with |V| >= 1");
    }

    Digraph g;
    g.node_count = static_cast<int>(n);
    g.edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_content_line(in, line, line_no))
            throw detail::parse_error(line_no, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
        std::istringstream ls(line);
        long long u = 0, v = 0;
        if (!(ls >> u >> v))
            throw detail::parse_error(line_no, "expected edge \"u v\"");
        if (u < 1 || u > n || v < 1 || v > n)
            throw detail::parse_error(line_no, "edge endpoint out of range 1..|V|");
        g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    if (detail::next_content_line(in, line, line_no)) {
        g.labels.assign(static_cast<std::size_t>(n) + 1, -1);
        for (long long i = 0; i < n; ++i) {
            if (i > 0 && !detail::next_content_line(in, line, line_no))
                throw detail::parse_error(line_no, "expected " + std::to_string(n) + " label lines, got " + std::to_string(i));
            std::istringstream ls(line);
            long long v = 0, lab = 0;
            if (!(ls >> v >> lab))
                throw detail::parse_error(line_no, "expected label line \"node label\"");
            if (v < 1 || v > n)
                throw detail::parse_error(line_no, "label node id out of range");
            if (lab < 0)
                throw detail::parse_error(line_no, "negative symbol code");
            if (g.labels[static_cast<std::size_t>(v)] != -1)
                throw detail::parse_error(line_no, "duplicate label for node " + std::to_string(v));
            g.labels[static_cast<std::size_t>(v)] = lab;
        }
        for (long long v = 1; v <= n; ++v)
            if (g.labels[static_cast<std::size_t>(v)] == -1)
                throw std::runtime_error("missing label for node " + std::to_string(v));
        g.labels[0] = 0; // unused padding slot
    }
    return g;
}

struct ParsedDag {
    LabeledDag dag;
    // old_to_new[old_id] = id in the returned dag; identity when !renumbered.
    std::vector<int> old_to_new;
    bool renumbered = false;
};

inline ParsedDag parse_dag(const std::string& text) {
    Digraph g = parse_digraph(text);

    bool sorted = true;
    for (const auto& [u, v] : g.edges)
        if (u >= v) { sorted = false; break; }

    std::vector<int> old_to_new(static_cast<std::size_t>(g.node_count) + 1);
    if (sorted) {
        for (int v = 0; v <= g.node_count; ++v) old_to_new[static_cast<std::size_t>(v)] = v;
        return ParsedDag{LabeledDag::create(g.node_count, g.edges, g.labels), std::move(old_to_new), false};
    }

    auto attempt = try_topological_order(g.node_count, g.edges);
    if (!attempt.is_dag)
        throw std::runtime_error("not a DAG: back edge " + std::to_string(attempt.back_edge.first) + " -> " +
                                 std::to_string(attempt.back_edge.second));
    for (int i = 0; i < g.node_count; ++i)
        old_to_new[static_cast<std::size_t>(attempt.order[static_cast<std::size_t>(i)])] = i + 1;

    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges)
        edges.emplace_back(old_to_new[static_cast<std::size_t>(u)], old_to_new[static_cast<std::size_t>(v)]);
    std::vector<Symbol> labels;
    if (g.labeled()) {
        labels.assign(static_cast<std::size_t>(g.node_count) + 1, 0);
        for (int v = 1; v <= g.node_count; ++v)
            labels[static_cast<std::size_t>(old_to_new[static_cast<std::size_t>(v)])] = g.labels[static_cast<std::size_t>(v)];
    }
    return ParsedDag{LabeledDag::create(g.node_count, std::move(edges), std::move(labels)), std::move(old_to_new), true};
}

inline std::string serialize(const LabeledDag& dag) {
    std::ostringstream out;
    out << dag.node_count() << ' ' << dag.edges().size() << '\n';
    for (const auto& [u, v] : dag.edges()) out << u << ' ' << v << '\n';
    if (dag.labeled())
        for (int v = 1; v <= dag.node_count(); ++v) out << v << ' ' << dag.label(v) << '\n';
    return out.str();
}

// Synthetic instance generator. Builds `target_width` node-disjoint backbone
// paths over 1..nodes, then sprinkles random forward cross edges. The
// backbones always remain a path cover, so the width never exceeds
// target_width regardless of the cross edges.
inline LabeledDag generate_dag(int nodes, int target_width, int label_alphabet, std::uint64_t seed,
                               long long extra_edges = -1) {
    if (target_width < 1) throw std::invalid_argument("target_width must be >= 1");
    if (nodes < target_width) throw std::invalid_argument("need at least target_width nodes");

    Rng rng(seed);
    std::vector<int> backbone_of(static_cast<std::size_t>(nodes) + 1);
    for (int v = 1; v <= nodes; ++v)
        backbone_of[static_cast<std::size_t>(v)] =
            v <= target_width ? v - 1 : static_cast<int>(rng.uniform(0, target_width - 1));

    std::vector<int> last(static_cast<std::size_t>(target_width), 0);
    std::set<Edge> edge_set;
    for (int v = 1; v <= nodes; ++v) {
        int b = backbone_of[static_cast<std::size_t>(v)];
        if (last[static_cast<std::size_t>(b)] != 0) edge_set.insert({last[static_cast<std::size_t>(b)], v});
        last[static_cast<std::size_t>(b)] = v;
    }

    const long long attempts = extra_edges < 0 ? nodes : extra_edges;
    for (long long t = 0; t < attempts && nodes > 1; ++t) {
        int u = static_cast<int>(rng.uniform(1, nodes - 1));
        int v = static_cast<int>(rng.uniform(u + 1, nodes));
        edge_set.insert({u, v});
    }

    std::vector<Symbol> labels;
    if (label_alphabet > 0) {
        labels.assign(static_cast<std::size_t>(nodes) + 1, 0);
        for (int v = 1; v <= nodes; ++v) labels[static_cast<std::size_t>(v)] = rng.uniform(0, label_alphabet - 1);
    }
    return LabeledDag::create(nodes, std::vector<Edge>(edge_set.begin(), edge_set.end()), std::move(labels));
}

} // namespace dagchain
