#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dagchain/mpc.hpp"
#include "test_util.hpp"

using namespace dagchain;

namespace {
LabeledDag path3() { return LabeledDag::create(3, {{1, 2}, {2, 3}}); }
LabeledDag diamond() { return LabeledDag::create(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }
LabeledDag star() { return LabeledDag::create(4, {{1, 2}, {1, 3}, {1, 4}}); }
} // namespace

TEST_CASE("greedy cover on a path") {
    auto cover = greedy_path_cover(path3());
    REQUIRE(cover.path_count() == 1);
    CHECK(cover.paths[0] == std::vector<int>{1, 2, 3});
    CHECK(is_valid_cover(path3(), cover));
}

TEST_CASE("greedy cover on the diamond follows the tie-break") {
    auto cover = greedy_path_cover(diamond());
    REQUIRE(cover.path_count() == 2);
    CHECK(cover.paths[0] == std::vector<int>{1, 2, 4}); // smallest id on ties
    CHECK(is_valid_cover(diamond(), cover));
}

TEST_CASE("greedy cover on the star") {
    auto cover = greedy_path_cover(star());
    CHECK(cover.path_count() == 3); // width is 3 by antichain {2,3,4}
    CHECK(is_valid_cover(star(), cover));
}

TEST_CASE("flow from a single-node cover") {
    auto dag = LabeledDag::create(1, {});
    auto net = build_flow_from_cover(dag, PathCover::from_paths(1, {{1}}));
    CHECK(net.value() == 1);
    CHECK(net.feasible());
    CHECK(net.arcs[net.arc_index(FlowNetwork::node_in(1), FlowNetwork::node_out(1))].flow == 1);
}

TEST_CASE("flow from the diamond cover routes through node 1 twice") {
    auto cover = PathCover::from_paths(4, {{1, 2, 4}, {1, 3, 4}});
    auto net = build_flow_from_cover(diamond(), cover);
    CHECK(net.value() == 2);
    CHECK(net.feasible());
    CHECK(net.arcs[net.arc_index(FlowNetwork::node_in(1), FlowNetwork::node_out(1))].flow == 2);
}

TEST_CASE("flow from the path cover carries one unit everywhere") {
    auto net = build_flow_from_cover(path3(), PathCover::from_paths(3, {{1, 2, 3}}));
    CHECK(net.value() == 1);
    for (int v = 1; v <= 3; ++v)
        CHECK(net.arcs[net.arc_index(FlowNetwork::node_in(v), FlowNetwork::node_out(v))].flow == 1);
}

TEST_CASE("shrinking an already minimum flow does nothing") {
    auto net = build_flow_from_cover(path3(), PathCover::from_paths(3, {{1, 2, 3}}));
    int rounds = -1;
    auto shrunk = shrink_to_minimum(net, &rounds);
    CHECK(rounds == 0);
    CHECK(shrunk.value() == 1);
}

TEST_CASE("shrinking removes redundant diamond paths") {
    auto cover = PathCover::from_paths(4, {{1, 2, 4}, {1, 3, 4}, {1, 2, 4}});
    auto net = build_flow_from_cover(diamond(), cover);
    CHECK(net.value() == 3);
    auto shrunk = shrink_to_minimum(net);
    CHECK(shrunk.value() == 2); // width of the diamond
    CHECK(shrunk.feasible());
}

TEST_CASE("star flow cannot shrink") {
    auto cover = greedy_path_cover(star());
    auto shrunk = shrink_to_minimum(build_flow_from_cover(star(), cover));
    CHECK(shrunk.value() == 3);
}

TEST_CASE("infeasible input flow is rejected") {
    auto net = build_flow_from_cover(path3(), PathCover::from_paths(3, {{1, 2, 3}}));
    net.arcs[net.arc_index(FlowNetwork::node_in(2), FlowNetwork::node_out(2))].flow = 0;
    CHECK_THROWS_AS(shrink_to_minimum(net), std::invalid_argument);
}

TEST_CASE("decomposition recovers covers") {
    auto net1 = build_flow_from_cover(path3(), PathCover::from_paths(3, {{1, 2, 3}}));
    auto cover1 = decompose_flow(net1);
    REQUIRE(cover1.path_count() == 1);
    CHECK(cover1.paths[0] == std::vector<int>{1, 2, 3});

    auto net2 = shrink_to_minimum(build_flow_from_cover(diamond(), greedy_path_cover(diamond())));
    auto cover2 = decompose_flow(net2);
    CHECK(cover2.path_count() == 2);
    CHECK(is_valid_cover(diamond(), cover2));

    auto net3 = build_flow_from_cover(star(), greedy_path_cover(star()));
    auto cover3 = decompose_flow(net3);
    CHECK(cover3.path_count() == 3);
    CHECK(is_valid_cover(star(), cover3));
}

TEST_CASE("width oracle basics") {
    CHECK(brute_force_width(path3()) == 1);
    CHECK(brute_force_width(diamond()) == 2);
    CHECK(brute_force_width(LabeledDag::create(6, {})) == 6); // independent set
    CHECK_THROWS_AS(brute_force_width(LabeledDag::create(300, {})), std::invalid_argument);
}

TEST_CASE("minimum path cover equals the width oracle") {
    CHECK(minimum_path_cover(path3()).path_count() == 1);
    CHECK(minimum_path_cover(diamond()).path_count() == 2);

    Rng rng(2718);
    for (int t = 0; t < 250; ++t) {
        auto dag = testutil::random_dag(rng, 30, rng.uniform01() * 0.4, 0);
        auto cover = minimum_path_cover(dag);
        REQUIRE(is_valid_cover(dag, cover));
        CHECK(cover.path_count() == brute_force_width(dag));
    }
}

TEST_CASE("generated graphs have the promised width") {
    auto dag = generate_dag(100, 5, 0, 99);
    CHECK(minimum_path_cover(dag).path_count() == brute_force_width(dag));
    CHECK(minimum_path_cover(dag).path_count() <= 5);
}

TEST_CASE("oracle agreement holds on mid-size graphs") {
    Rng rng(5150);
    for (int t = 0; t < 30; ++t) {
        auto dag = testutil::random_dag(rng, 120, rng.uniform01() * 0.1, 0);
        auto cover = minimum_path_cover(dag);
        REQUIRE(is_valid_cover(dag, cover));
        CHECK(cover.path_count() == brute_force_width(dag));
    }
    for (int t = 0; t < 10; ++t) {
        auto dag = generate_dag(static_cast<int>(rng.uniform(50, 150)), static_cast<int>(rng.uniform(1, 12)), 0,
                                rng.next());
        CHECK(minimum_path_cover(dag).path_count() == brute_force_width(dag));
    }
}

TEST_CASE("greedy stays within the ln-factor bound") {
    Rng rng(31415);
    for (int t = 0; t < 250; ++t) {
        auto dag = testutil::random_dag(rng, 30, rng.uniform01() * 0.4, 0);
        const int k = brute_force_width(dag);
        const long long bound = static_cast<long long>(k) * (static_cast<long long>(std::ceil(std::log(dag.node_count()))) + 1);
        CHECK(greedy_path_cover(dag).path_count() <= bound);
    }
}

TEST_CASE("shrink augmentation count is bounded by K - k") {
    Rng rng(123);
    for (int t = 0; t < 100; ++t) {
        auto dag = testutil::random_dag(rng, 25, 0.3, 0);
        auto greedy = greedy_path_cover(dag);
        int rounds = -1;
        auto net = shrink_to_minimum(build_flow_from_cover(dag, greedy), &rounds);
        CHECK(rounds <= greedy.path_count() - static_cast<int>(net.value()));
        CHECK(net.feasible());
        auto cover = decompose_flow(net);
        CHECK(cover.path_count() == static_cast<int>(net.value()));
        CHECK(is_valid_cover(dag, cover));
    }
}
