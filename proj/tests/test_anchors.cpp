#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "dagchain/anchors.hpp"
#include "test_util.hpp"

using namespace dagchain;

namespace {
LabeledDag labeled_path(const std::vector<Symbol>& seq) {
    std::vector<Edge> edges;
    std::vector<Symbol> labels{0};
    for (std::size_t v = 1; v <= seq.size(); ++v) {
        labels.push_back(seq[v - 1]);
        if (v > 1) edges.emplace_back(static_cast<int>(v) - 1, static_cast<int>(v));
    }
    return LabeledDag::create(static_cast<int>(seq.size()), std::move(edges), std::move(labels));
}

bool sound(const LabeledDag& dag, std::span<const Symbol> read, const Anchor& a) {
    if (a.d - a.c + 1 != static_cast<long long>(a.path.size())) return false;
    for (std::size_t i = 0; i < a.path.size(); ++i)
        if (dag.label(a.path[i]) != read[static_cast<std::size_t>(a.c) - 1 + i]) return false;
    return true;
}

// Ground truth: enumerate every path match by DFS, keep per (endpoint, end
// position) the maximum length, then apply the right-maximality rule.
std::set<std::tuple<int, long long, long long>> brute_maximal_matches(const LabeledDag& dag,
                                                                      std::span<const Symbol> read, int min_len) {
    std::map<std::pair<int, int>, int> best; // (endpoint, end pos) -> max length
    const int m = static_cast<int>(read.size());

    auto walk = [&](auto&& self, int v, int j, int len) -> void {
        // the path so far ends at node v matching read position j with `len`
        auto key = std::make_pair(v, j);
        auto it = best.find(key);
        if (it == best.end() || it->second < len) best[key] = len;
        if (j == m) return;
        for (int w : dag.out_neighbors(v))
            if (dag.label(w) == read[static_cast<std::size_t>(j)]) self(self, w, j + 1, len + 1);
    };
    for (int v = 1; v <= dag.node_count(); ++v)
        for (int j = 1; j <= m; ++j)
            if (dag.label(v) == read[static_cast<std::size_t>(j) - 1]) walk(walk, v, j, 1);

    std::set<std::tuple<int, long long, long long>> out;
    for (const auto& [key, len] : best) {
        const auto& [v, j] = key;
        if (len < min_len) continue;
        bool extendable = false;
        if (j < m)
            for (int w : dag.out_neighbors(v))
                if (dag.label(w) == read[static_cast<std::size_t>(j)]) extendable = true;
        if (!extendable) out.insert({v, j - len + 1, j});
    }
    return out;
}
} // namespace

TEST_CASE("full match on a path graph") {
    auto dag = labeled_path({1, 2, 3});
    const std::vector<Symbol> read{1, 2, 3};
    auto anchors = find_anchors(dag, read, AnchorParams{3, -1});
    REQUIRE(anchors.size() == 1);
    CHECK(anchors[0].path == std::vector<int>{1, 2, 3});
    CHECK(anchors[0].c == 1);
    CHECK(anchors[0].d == 3);
}

TEST_CASE("no match, no anchors") {
    auto dag = labeled_path({1, 2, 3});
    const std::vector<Symbol> read{7, 8, 9};
    CHECK(find_anchors(dag, read, AnchorParams{1, -1}).empty());
}

TEST_CASE("diamond emits the maximal branch match") {
    // labels a,b,c,d; read "abd": the maximal match runs through 1,2,4
    auto dag = LabeledDag::create(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}, {0, 1, 2, 3, 4});
    const std::vector<Symbol> read{1, 2, 4};
    auto anchors = find_anchors(dag, read, AnchorParams{2, -1});
    REQUIRE(anchors.size() == 1);
    CHECK(anchors[0].path == std::vector<int>{1, 2, 4});
    CHECK(anchors[0].c == 1);
    CHECK(anchors[0].d == 3);
    CHECK(sound(dag, read, anchors[0]));
    auto expect = brute_maximal_matches(dag, read, 2);
    CHECK(expect == std::set<std::tuple<int, long long, long long>>{{4, 1, 3}});
}

TEST_CASE("every anchor is an exact match and two-sided maximal") {
    Rng rng(303);
    for (int t = 0; t < 100; ++t) {
        auto dag = testutil::random_dag(rng, 15, 0.3, 3);
        std::vector<Symbol> read;
        const int m = static_cast<int>(rng.uniform(1, 12));
        for (int i = 0; i < m; ++i) read.push_back(rng.uniform(0, 2));
        for (const auto& a : find_anchors(dag, read, AnchorParams{1, -1})) {
            CHECK(sound(dag, read, a));
            if (a.d < m) {
                bool right = false;
                for (int w : dag.out_neighbors(a.path.back()))
                    if (dag.label(w) == read[static_cast<std::size_t>(a.d)]) right = true;
                CHECK_FALSE(right);
            }
            if (a.c > 1) {
                bool left = false;
                for (int u : dag.in_neighbors(a.path.front()))
                    if (dag.label(u) == read[static_cast<std::size_t>(a.c) - 2]) left = true;
                CHECK_FALSE(left);
            }
        }
    }
}

TEST_CASE("emitted states equal the brute-force maximal matches") {
    Rng rng(404);
    for (int t = 0; t < 200; ++t) {
        auto dag = testutil::random_dag(rng, 10, 0.35, 2);
        std::vector<Symbol> read;
        const int m = static_cast<int>(rng.uniform(1, 8));
        for (int i = 0; i < m; ++i) read.push_back(rng.uniform(0, 1));
        const int min_len = static_cast<int>(rng.uniform(1, 3));

        auto anchors = find_anchors(dag, read, AnchorParams{min_len, -1});
        std::set<std::tuple<int, long long, long long>> got;
        for (const auto& a : anchors) {
            CHECK(sound(dag, read, a));
            got.insert({a.path.back(), a.c, a.d});
        }
        CHECK(got.size() == anchors.size()); // one witness per maximal state
        CHECK(got == brute_maximal_matches(dag, read, min_len));
    }
}

TEST_CASE("anchor cap keeps the longest matches") {
    auto dag = labeled_path({1, 2, 1, 2, 1, 2, 3});
    const std::vector<Symbol> read{1, 2, 3};
    auto all = find_anchors(dag, read, AnchorParams{1, -1});
    auto capped = find_anchors(dag, read, AnchorParams{1, 2});
    REQUIRE(capped.size() == 2);
    long long shortest_kept = capped.back().d - capped.back().c;
    for (const auto& a : all) {
        const long long len = a.d - a.c;
        if (len > shortest_kept) {
            bool found = false;
            for (const auto& k : capped)
                if (k.path == a.path && k.c == a.c && k.d == a.d) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("parameter validation") {
    auto dag = LabeledDag::create(2, {{1, 2}});
    CHECK_THROWS_AS(find_anchors(dag, std::vector<Symbol>{1}, AnchorParams{1, -1}), std::invalid_argument);
    auto labeled = labeled_path({1, 2});
    CHECK_THROWS_AS(find_anchors(labeled, std::vector<Symbol>{1}, AnchorParams{0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(find_anchors(labeled, std::vector<Symbol>{-1}, AnchorParams{1, -1}), std::invalid_argument);
}
