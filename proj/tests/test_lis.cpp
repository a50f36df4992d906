#include <catch2/catch_amalgamated.hpp>

#include "dagchain/lis.hpp"
#include "test_util.hpp"

using namespace dagchain;

namespace {
struct Prepared {
    PathCover cover;
    ForwardLinks links;
};
Prepared prepare(const LabeledDag& dag) {
    Prepared p;
    p.cover = minimum_path_cover(dag);
    p.links = forward_links(p.cover, last_to_reach(dag, p.cover));
    return p;
}

std::vector<Symbol> witness_labels(const LisResult& r) {
    std::vector<Symbol> out;
    for (const auto& [node, label] : r.witness) out.push_back(label);
    return out;
}
} // namespace

TEST_CASE("sequence example") {
    const std::vector<Symbol> seq{1, 4, 2, 3, 7, 5, 6};
    auto res = lis_sequence(seq);
    CHECK(res.length == 5);
    CHECK(witness_labels(res) == std::vector<Symbol>{1, 2, 3, 5, 6});
}

TEST_CASE("sequence edge cases") {
    CHECK(lis_sequence(std::vector<Symbol>{}).length == 0);
    CHECK(lis_sequence(std::vector<Symbol>{9, 7, 5, 3}).length == 1);
    const std::vector<Symbol> inc{2, 3, 5, 8, 13};
    auto res = lis_sequence(inc);
    CHECK(res.length == 5);
    CHECK(witness_labels(res) == inc);
    CHECK(lis_sequence(std::vector<Symbol>{4, 4, 4}).length == 1); // strictness
}

// Ten-node instance with the roles of the worked example: u (label 4,
// value 1), u' (label 7, value 3) and v (label 8) which ends at 4.
TEST_CASE("three-path worked instance") {
    std::vector<Symbol> labels{0, 3, 6, 4, 7, 7, 5, 9, 8, 1, 2};
    auto dag = LabeledDag::create(10,
                                  {{1, 2}, {1, 6}, {2, 4}, {3, 8}, {3, 9}, {4, 8}, {5, 6}, {6, 7}, {7, 8}, {9, 10}},
                                  labels);
    auto p = prepare(dag);
    auto res = lis_dag(dag, p.cover, p.links);
    CHECK(res.best_ending_at[3] == 1); // u
    CHECK(res.best_ending_at[4] == 3); // u'
    CHECK(res.best_ending_at[8] == 4); // v
    CHECK(res.length == 4);
    CHECK(res.length == brute_force_lis_dag(dag));
}

TEST_CASE("path-shaped DAG equals the sequence algorithm") {
    const std::vector<Symbol> seq{1, 4, 2, 3, 7, 5, 6};
    std::vector<Edge> edges;
    std::vector<Symbol> labels{0};
    for (int v = 1; v <= 7; ++v) {
        labels.push_back(seq[static_cast<std::size_t>(v) - 1]);
        if (v > 1) edges.emplace_back(v - 1, v);
    }
    auto dag = LabeledDag::create(7, std::move(edges), std::move(labels));
    auto p = prepare(dag);
    REQUIRE(p.cover.path_count() == 1);
    auto res = lis_dag(dag, p.cover, p.links);
    auto ref = lis_sequence(seq);
    CHECK(res.length == 5);
    CHECK(res.best_ending_at == ref.best_ending_at);
}

TEST_CASE("equal labels everywhere give length one") {
    auto dag = LabeledDag::create(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}, {0, 5, 5, 5, 5});
    auto p = prepare(dag);
    CHECK(lis_dag(dag, p.cover, p.links).length == 1);
}

TEST_CASE("unlabeled input is rejected") {
    auto dag = LabeledDag::create(2, {{1, 2}});
    auto p = prepare(dag);
    CHECK_THROWS_AS(lis_dag(dag, p.cover, p.links), std::invalid_argument);
}

TEST_CASE("oracle basics") {
    auto diamond = LabeledDag::create(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}, {0, 1, 5, 2, 3});
    CHECK(brute_force_lis_dag(diamond) == 3); // 1,2,3 through nodes 1,3,4
    auto p = prepare(diamond);
    CHECK(lis_dag(diamond, p.cover, p.links).length == 3);

    auto single = LabeledDag::create(1, {}, {0, 9});
    CHECK(brute_force_lis_dag(single) == 1);
    CHECK_THROWS_AS(brute_force_lis_dag(LabeledDag::create(20, {}, std::vector<Symbol>(21, 1))),
                    std::invalid_argument);
}

TEST_CASE("random corpus matches the path-enumeration oracle") {
    Rng rng(777);
    for (int t = 0; t < 200; ++t) {
        auto dag = testutil::random_dag(rng, 12, rng.uniform01() * 0.4, static_cast<int>(rng.uniform(1, 8)));
        auto p = prepare(dag);
        auto res = lis_dag(dag, p.cover, p.links);
        auto per_node = brute_force_lis_ending_at(dag);
        CHECK(res.length == brute_force_lis_dag(dag));
        for (int v = 1; v <= dag.node_count(); ++v) CHECK(res.best_ending_at[static_cast<std::size_t>(v)] == per_node[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("results do not depend on the cover being minimum") {
    Rng rng(930);
    for (int t = 0; t < 150; ++t) {
        auto dag = testutil::random_dag(rng, 12, rng.uniform01() * 0.4, 6);
        auto cover = greedy_path_cover(dag);
        auto links = forward_links(cover, last_to_reach(dag, cover));
        auto res = lis_dag(dag, cover, links);
        CHECK(res.best_ending_at == brute_force_lis_ending_at(dag));
    }
}

TEST_CASE("witness is a strictly increasing chain of reachable nodes") {
    Rng rng(888);
    for (int t = 0; t < 100; ++t) {
        auto dag = testutil::random_dag(rng, 12, 0.3, 6);
        auto p = prepare(dag);
        auto res = lis_dag(dag, p.cover, p.links);
        REQUIRE(res.witness.size() == static_cast<std::size_t>(res.length));
        auto reach = testutil::dfs_reachability(dag);
        for (std::size_t i = 0; i < res.witness.size(); ++i) {
            CHECK(res.witness[i].second == dag.label(res.witness[i].first));
            if (i > 0) {
                CHECK(res.witness[i - 1].second < res.witness[i].second);
                CHECK(reach[static_cast<std::size_t>(res.witness[i - 1].first)][static_cast<std::size_t>(res.witness[i].first)]);
                CHECK(res.witness[i - 1].first != res.witness[i].first);
            }
        }
    }
}
