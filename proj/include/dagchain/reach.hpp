#pragma once

// Propagation machinery shared by the DP algorithms, plus an O(1)-query
// reachability index for arbitrary digraphs.
//
// For a cover path i and node v, the table stores the 1-based position of
// the last node on path i that reaches v (-1 when no node of the path does).
// Inverting the table yields the forward propagation links that drive the
// per-path data structure updates.

#include <stdexcept>
#include <utility>
#include <vector>

#include "dagchain/graph.hpp"
#include "dagchain/mpc.hpp"

namespace dagchain {

struct LastToReach {
    int path_count = 0;
    // table[v][i] = 1-based position on path i of the last node reaching v, or -1.
    std::vector<std::vector<int>> table;
    // membership[v] = (path, 1-based position) pairs, ascending by path.
    std::vector<std::vector<std::pair<int, int>>> membership;

    int position_of(int v, int path) const {
        for (const auto& [i, pos] : membership[static_cast<std::size_t>(v)])
            if (i == path) return pos;
        return -1;
    }
};

inline LastToReach last_to_reach(const LabeledDag& dag, const PathCover& cover) {
    const int n = dag.node_count();
    const int k = cover.path_count();
    LastToReach res;
    res.path_count = k;
    res.membership.assign(static_cast<std::size_t>(n) + 1, {});
    for (int i = 0; i < k; ++i)
        for (std::size_t p = 0; p < cover.paths[static_cast<std::size_t>(i)].size(); ++p)
            res.membership[static_cast<std::size_t>(cover.paths[static_cast<std::size_t>(i)][p])].emplace_back(
                i, static_cast<int>(p) + 1);

    res.table.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(k), -1));
    for (int v = 1; v <= n; ++v) {
        auto& row = res.table[static_cast<std::size_t>(v)];
        for (int u : dag.in_neighbors(v)) {
            const auto& prev = res.table[static_cast<std::size_t>(u)];
            for (int i = 0; i < k; ++i) row[static_cast<std::size_t>(i)] = std::max(row[static_cast<std::size_t>(i)], prev[static_cast<std::size_t>(i)]);
        }
        for (const auto& [i, pos] : res.membership[static_cast<std::size_t>(v)]) row[static_cast<std::size_t>(i)] = pos;
    }
    return res;
}

struct ForwardLinks {
    // links[u] = (v, path) pairs with u the last node on `path` reaching v,
    // ordered by (v, path). Every covered node self-links on its own paths.
    std::vector<std::vector<std::pair<int, int>>> links;

    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& row : links) t += row.size();
        return t;
    }
};

inline ForwardLinks forward_links(const PathCover& cover, const LastToReach& l2r) {
    ForwardLinks fl;
    fl.links.assign(l2r.table.size(), {});
    for (std::size_t v = 1; v < l2r.table.size(); ++v)
        for (int i = 0; i < l2r.path_count; ++i) {
            const int pos = l2r.table[v][static_cast<std::size_t>(i)];
            if (pos < 0) continue;
            const int u = cover.paths[static_cast<std::size_t>(i)][static_cast<std::size_t>(pos) - 1];
            fl.links[static_cast<std::size_t>(u)].emplace_back(static_cast<int>(v), i);
        }
    return fl;
}

// Reachability index of size O(k|V|): condense strongly connected
// components, cover the condensation with a minimum path cover and store,
// per component, one containing path and the last-to-reach table. A query
// is a single table lookup.
class ReachIndex {
public:
    static ReachIndex build(const Digraph& g) {
        ReachIndex idx;
        idx.node_count_ = g.node_count;
        idx.comp_ = condense(g, idx.comp_count_);

        // Condensation edges (components are numbered topologically).
        std::vector<Edge> cedges;
        cedges.reserve(g.edges.size());
        for (const auto& [u, v] : g.edges) {
            int cu = idx.comp_[static_cast<std::size_t>(u)];
            int cv = idx.comp_[static_cast<std::size_t>(v)];
            if (cu != cv) cedges.emplace_back(cu, cv);
        }
        std::sort(cedges.begin(), cedges.end());
        cedges.erase(std::unique(cedges.begin(), cedges.end()), cedges.end());

        LabeledDag condensation = LabeledDag::create(idx.comp_count_, std::move(cedges));
        PathCover cover = minimum_path_cover(condensation);
        LastToReach l2r = last_to_reach(condensation, cover);

        idx.width_ = cover.path_count();
        idx.l2r_ = std::move(l2r.table);
        idx.home_path_.assign(static_cast<std::size_t>(idx.comp_count_) + 1, -1);
        idx.home_pos_.assign(static_cast<std::size_t>(idx.comp_count_) + 1, -1);
        for (int c = 1; c <= idx.comp_count_; ++c) {
            const auto& member = l2r.membership[static_cast<std::size_t>(c)].front();
            idx.home_path_[static_cast<std::size_t>(c)] = member.first;
            idx.home_pos_[static_cast<std::size_t>(c)] = member.second;
        }
        return idx;
    }

    // True iff y is reachable from x along a possibly empty path.
    bool reaches(int x, int y) const {
        if (x < 1 || x > node_count_ || y < 1 || y > node_count_)
            throw std::out_of_range("node id out of range");
        const int cx = comp_[static_cast<std::size_t>(x)];
        const int cy = comp_[static_cast<std::size_t>(y)];
        if (cx == cy) return true;
        const int i = home_path_[static_cast<std::size_t>(cx)];
        return l2r_[static_cast<std::size_t>(cy)][static_cast<std::size_t>(i)] >= home_pos_[static_cast<std::size_t>(cx)];
    }

    int width() const { return width_; }
    int component_of(int v) const { return comp_[static_cast<std::size_t>(v)]; }

private:
    // Iterative Tarjan; components come out in reverse topological order and
    // are renumbered so condensation edges go from smaller to larger ids.
    static std::vector<int> condense(const Digraph& g, int& comp_count) {
        const int n = g.node_count;
        auto out = out_adjacency(n, g.edges);
        std::vector<int> index(static_cast<std::size_t>(n) + 1, 0), low(static_cast<std::size_t>(n) + 1, 0),
            comp(static_cast<std::size_t>(n) + 1, 0);
        std::vector<char> on_stack(static_cast<std::size_t>(n) + 1, 0);
        std::vector<int> stack;
        int counter = 0, emitted = 0;

        struct Frame {
            int v;
            std::size_t it;
        };
        for (int root = 1; root <= n; ++root) {
            if (index[static_cast<std::size_t>(root)] != 0) continue;
            std::vector<Frame> frames{{root, 0}};
            index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = ++counter;
            stack.push_back(root);
            on_stack[static_cast<std::size_t>(root)] = 1;
            while (!frames.empty()) {
                auto& [v, it] = frames.back();
                const auto& row = out[static_cast<std::size_t>(v)];
                if (it < row.size()) {
                    int w = row[it++];
                    if (index[static_cast<std::size_t>(w)] == 0) {
                        index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = ++counter;
                        stack.push_back(w);
                        on_stack[static_cast<std::size_t>(w)] = 1;
                        frames.push_back({w, 0});
                    } else if (on_stack[static_cast<std::size_t>(w)]) {
                        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
                    }
                } else {
                    if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                        ++emitted;
                        while (true) {
                            int w = stack.back();
                            stack.pop_back();
                            on_stack[static_cast<std::size_t>(w)] = 0;
                            comp[static_cast<std::size_t>(w)] = emitted;
                            if (w == v) break;
                        }
                    }
                    int finished = v;
                    frames.pop_back();
                    if (!frames.empty())
                        low[static_cast<std::size_t>(frames.back().v)] =
                            std::min(low[static_cast<std::size_t>(frames.back().v)], low[static_cast<std::size_t>(finished)]);
                }
            }
        }
        comp_count = emitted;
        for (int v = 1; v <= n; ++v) comp[static_cast<std::size_t>(v)] = comp_count + 1 - comp[static_cast<std::size_t>(v)];
        return comp;
    }

    int node_count_ = 0;
    int comp_count_ = 0;
    int width_ = 0;
    std::vector<int> comp_;
    std::vector<int> home_path_, home_pos_;
    std::vector<std::vector<int>> l2r_;
};

inline ReachIndex build_reach_index(const Digraph& g) { return ReachIndex::build(g); }

} // namespace dagchain
