#pragma once

// Exact-match anchor generation between a labeled DAG and a read R.
// ext[v][j] = length of the longest exact path match ending at node v and
// read position j. A state is emitted when the match cannot be extended to
// the right; the DP value itself guarantees left-maximality. The witness
// path follows the smallest-id maximizing predecessor.

#include <span>
#include <stdexcept>
#include <vector>

#include "dagchain/chain.hpp"
#include "dagchain/graph.hpp"

namespace dagchain {

struct AnchorParams {
    int min_length = 1;
    long long max_anchors = -1; // keep the longest ones when exceeded; -1 = no cap
};

inline std::vector<Anchor> find_anchors(const LabeledDag& dag, std::span<const Symbol> read,
                                        const AnchorParams& params) {
    if (!dag.labeled()) throw std::invalid_argument("find_anchors requires a labeled DAG");
    if (params.min_length < 1) throw std::invalid_argument("min_length must be >= 1");
    for (Symbol s : read)
        if (s < 0) throw std::invalid_argument("negative symbol code in read");

    const int n = dag.node_count();
    const int m = static_cast<int>(read.size());
    std::vector<std::vector<int>> ext(static_cast<std::size_t>(n) + 1,
                                      std::vector<int>(static_cast<std::size_t>(m) + 1, 0));
    for (int v = 1; v <= n; ++v)
        for (int j = 1; j <= m; ++j) {
            if (dag.label(v) != read[static_cast<std::size_t>(j) - 1]) continue;
            int best = 0;
            for (int u : dag.in_neighbors(v)) best = std::max(best, ext[static_cast<std::size_t>(u)][static_cast<std::size_t>(j) - 1]);
            ext[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] = best + 1;
        }

    std::vector<Anchor> anchors;
    for (int v = 1; v <= n; ++v)
        for (int j = 1; j <= m; ++j) {
            const int len = ext[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
            if (len < params.min_length) continue;
            if (j < m) {
                bool extendable = false;
                for (int w : dag.out_neighbors(v))
                    if (dag.label(w) == read[static_cast<std::size_t>(j)]) {
                        extendable = true;
                        break;
                    }
                if (extendable) continue;
            }

            Anchor a;
            a.d = j;
            a.c = j - len + 1;
            a.path.assign(static_cast<std::size_t>(len), 0);
            int cur = v, jj = j;
            for (int t = len; t >= 1; --t) {
                a.path[static_cast<std::size_t>(t) - 1] = cur;
                if (t == 1) break;
                const int want = ext[static_cast<std::size_t>(cur)][static_cast<std::size_t>(jj)] - 1;
                int pick = -1;
                for (int u : dag.in_neighbors(cur))
                    if (ext[static_cast<std::size_t>(u)][static_cast<std::size_t>(jj) - 1] == want) {
                        pick = u;
                        break;
                    }
                cur = pick;
                --jj;
            }
            anchors.push_back(std::move(a));
        }

    if (params.max_anchors >= 0 && static_cast<long long>(anchors.size()) > params.max_anchors) {
        std::stable_sort(anchors.begin(), anchors.end(), [](const Anchor& a, const Anchor& b) {
            return a.d - a.c > b.d - b.c;
        });
        anchors.resize(static_cast<std::size_t>(params.max_anchors));
    }
    return anchors;
}

} // namespace dagchain
