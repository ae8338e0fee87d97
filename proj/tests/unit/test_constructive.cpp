#include <algorithm>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "../support/planted.hpp"
#include "doctest.h"
#include "stk/closure.hpp"
#include "stk/enumerate.hpp"
#include "stk/extremal.hpp"
#include "stk/graph.hpp"
#include "stk/trees.hpp"

using stk::Graph;
using stk::MatchingInstance;
using stk::PathSystem;

TEST_CASE("matching instance validation") {
    MatchingInstance good{{10, 11}, {0, 1}, {{0, 1}, {1}}};
    CHECK_NOTHROW(good.validate());

    CHECK_THROWS_AS((MatchingInstance{{10}, {0, 1}, {{0}, {1}}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((MatchingInstance{{10, 10}, {0, 1}, {{0}, {1}}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((MatchingInstance{{10, 11}, {0, 10}, {{0}, {10}}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((MatchingInstance{{10, 11}, {0, 1}, {{0}, {0}}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((MatchingInstance{{10, 11}, {0, 1}, {{0, 11}, {1}}}).validate(), std::invalid_argument);
}

TEST_CASE("bare matchings split into singleton segments") {
    MatchingInstance mi{{10, 11, 12}, {0, 1, 2}, {{0}, {1}, {2}}};
    PathSystem ps = stk::build_path_system(mi);
    REQUIRE(ps.paths.size() == 3);
    CHECK(ps.paths[0] == std::vector<int>{0, 10});
    CHECK(ps.paths[1] == std::vector<int>{1, 11});
    CHECK(ps.paths[2] == std::vector<int>{2, 12});
    CHECK(ps.breakpoints == std::vector<int>{1, 2, 3});
    std::string why;
    CHECK_MESSAGE(stk::validate_path_system(mi, ps, &why), why);
}

TEST_CASE("complete bipartite instances collapse to one segment") {
    MatchingInstance mi{{10, 11, 12}, {0, 1, 2}, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
    PathSystem ps = stk::build_path_system(mi);
    REQUIRE(ps.paths.size() == 1);
    CHECK(ps.paths[0].size() == 6);
    CHECK(ps.breakpoints == std::vector<int>{3});
    std::string why;
    CHECK_MESSAGE(stk::validate_path_system(mi, ps, &why), why);
}

TEST_CASE("two planted components give two segments") {
    MatchingInstance mi{{10, 11, 12, 13},
                        {0, 1, 2, 3},
                        {{0, 1}, {0, 1}, {2, 3}, {2, 3}}};
    PathSystem ps = stk::build_path_system(mi);
    REQUIRE(ps.paths.size() == 2);
    CHECK(ps.breakpoints == std::vector<int>{2, 4});
    CHECK(ps.paths[0] == std::vector<int>{0, 10, 1, 11});
    CHECK(ps.paths[1] == std::vector<int>{2, 12, 3, 13});
    std::string why;
    CHECK_MESSAGE(stk::validate_path_system(mi, ps, &why), why);
}

TEST_CASE("head extension keeps segments maximal") {
    // tail of the first pair is stuck; growth must happen at the head
    MatchingInstance mi{{10, 11, 12}, {0, 1, 2}, {{0}, {0, 1}, {2}}};
    PathSystem ps = stk::build_path_system(mi);
    REQUIRE(ps.paths.size() == 2);
    CHECK(ps.paths[0] == std::vector<int>{1, 11, 0, 10});
    std::string why;
    CHECK_MESSAGE(stk::validate_path_system(mi, ps, &why), why);
}

TEST_CASE("tampered systems are rejected") {
    MatchingInstance mi{{10, 11}, {0, 1}, {{0, 1}, {0, 1}}};
    PathSystem ps = stk::build_path_system(mi);
    std::string why;
    REQUIRE(stk::validate_path_system(mi, ps, &why));

    PathSystem bad = ps;
    std::reverse(bad.paths[0].begin(), bad.paths[0].end());
    CHECK(!stk::validate_path_system(mi, bad, &why));

    PathSystem split{{{0, 10}, {1, 11}}, {1, 2}, ps.vs, ps.us};
    // both pairs are linked, so stopping early violates maximality
    CHECK(!stk::validate_path_system(mi, split, &why));
}

TEST_CASE("single-segment assembly walks the spare clique part") {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) edges.push_back({u, v});
    edges.push_back({0, 6});
    Graph g = Graph::from_edge_list(7, edges);

    MatchingInstance mi{{6}, {0}, {{0}}};
    PathSystem ps = stk::build_path_system(mi);
    std::vector<int> clique = {0, 1, 2, 3, 4, 5};
    std::vector<int> spare = {1, 2, 3, 4, 5};
    std::vector<int> seq = stk::assemble_hamilton_path(g, clique, ps, spare);
    CHECK(planted::is_hamilton_path_of(g, {0, 1, 2, 3, 4, 5, 6}, seq));

    // trivial instance: the clique is exhausted by the matched pair
    Graph tiny = Graph::from_edge_list(2, std::vector<std::pair<int, int>>{{0, 1}});
    std::vector<int> tiny_seq =
        stk::assemble_hamilton_path(tiny, {0}, stk::build_path_system(MatchingInstance{{1}, {0}, {{0}}}), {});
    CHECK(tiny_seq == std::vector<int>{0, 1});
}

TEST_CASE("two-segment assembly ends at the outside vertices") {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges.push_back({u, v});
    for (int c : {0, 1}) edges.push_back({5, c});
    for (int c : {0, 1}) edges.push_back({6, c});
    edges.push_back({7, 2});
    Graph g = Graph::from_edge_list(8, edges);

    MatchingInstance mi{{5, 6, 7}, {0, 1, 2}, {{0, 1}, {0, 1}, {2}}};
    PathSystem ps = stk::build_path_system(mi);
    REQUIRE(ps.paths.size() == 2);
    std::vector<int> seq = stk::assemble_hamilton_path(g, {0, 1, 2, 3, 4}, ps, {3, 4});
    CHECK(planted::is_hamilton_path_of(g, {0, 1, 2, 3, 4, 5, 6, 7}, seq));
    CHECK(seq.front() == ps.paths[1].back());
    CHECK(seq.back() == ps.paths[0].back());
}

TEST_CASE("three segments need one connector") {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges.push_back({u, v});
    edges.push_back({5, 0});
    edges.push_back({6, 1});
    edges.push_back({7, 2});
    edges.push_back({5, 4});  // the connector edge
    Graph g = Graph::from_edge_list(8, edges);

    MatchingInstance mi{{5, 6, 7}, {0, 1, 2}, {{0, 4}, {1}, {2}}};
    PathSystem ps = stk::build_path_system(mi);
    REQUIRE(ps.paths.size() == 3);
    std::vector<int> seq = stk::assemble_hamilton_path(g, {0, 1, 2, 3, 4}, ps, {3, 4});
    CHECK(planted::is_hamilton_path_of(g, {0, 1, 2, 3, 4, 5, 6, 7}, seq));
}

TEST_CASE("connector fallback matches when greedy picks clash") {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) edges.push_back({u, v});
    edges.push_back({6, 0});
    edges.push_back({7, 1});
    edges.push_back({8, 2});
    edges.push_back({9, 3});
    edges.push_back({6, 4});
    edges.push_back({6, 5});
    edges.push_back({7, 4});  // junction after the second segment only reaches 4
    Graph g = Graph::from_edge_list(10, edges);

    MatchingInstance mi{{6, 7, 8, 9}, {0, 1, 2, 3}, {{0, 4, 5}, {1, 4}, {2}, {3}}};
    PathSystem ps = stk::build_path_system(mi);
    REQUIRE(ps.paths.size() == 4);
    std::vector<int> seq = stk::assemble_hamilton_path(g, {0, 1, 2, 3, 4, 5}, ps, {4, 5});
    CHECK(planted::is_hamilton_path_of(g, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, seq));

    Graph starved = g.without_edge(6, 5);  // now both junctions fight over 4
    CHECK_THROWS_AS(stk::assemble_hamilton_path(starved, {0, 1, 2, 3, 4, 5}, ps, {4, 5}),
                    stk::AssemblyError);
}

TEST_CASE("planted fixtures assemble end to end") {
    int made = 0;
    for (int i = 0; i < 40; ++i) {
        planted::Fixture fx = planted::make_fixture(0xF1B0u + i, 1 + i % 4);
        CHECK_NOTHROW(fx.mi.validate());
        PathSystem ps = stk::build_path_system(fx.mi);
        CHECK(int(ps.paths.size()) == fx.segments);
        std::string why;
        REQUIRE_MESSAGE(stk::validate_path_system(fx.mi, ps, &why), why);

        std::vector<int> everyone = fx.clique;
        everyone.insert(everyone.end(), fx.mi.xs.begin(), fx.mi.xs.end());
        std::vector<int> seq = stk::assemble_hamilton_path(fx.g, fx.clique, ps, fx.spare);
        REQUIRE(planted::is_hamilton_path_of(fx.g, everyone, seq));
        ++made;
    }
    CHECK(made == 40);
}

TEST_CASE("leftover attachment bounds the leaf count") {
    Graph g = Graph::from_edge_list(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    Graph p3 = Graph::path(3);
    stk::TreeWitness plain = stk::extend_to_k_ended_tree(p3, {0, 1, 2}, {});
    CHECK(plain.leaf_count == 2);
    CHECK(stk::validate_tree(p3, plain));

    // leftover hanging off the middle of the path
    Graph mid = Graph::from_edge_list(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
    stk::TreeWitness bump = stk::extend_to_k_ended_tree(mid, {0, 1, 2}, {3});
    CHECK(bump.leaf_count == 3);
    CHECK(stk::validate_tree(mid, bump));

    // leftover adjacent only to an endpoint extends the path instead
    stk::TreeWitness chain = stk::extend_to_k_ended_tree(g, {0, 1, 2}, {3});
    CHECK(chain.leaf_count == 2);
    CHECK(stk::validate_tree(g, chain));

    Graph off = Graph::from_edge_list(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(stk::extend_to_k_ended_tree(off, {0, 1, 2}, {3}), std::invalid_argument);
}

TEST_CASE("edge threshold arithmetic") {
    CHECK(stk::dense_edge_threshold(17, 2, 1) == 98);  // C(14,2) + 4 + 3
    for (int k = 2; k <= 4; ++k)
        for (int t = 1; t <= 3; ++t)
            for (int n = k + 2 * t; n <= 30; ++n) {
                long long a = std::max(n - k - t, 0);
                long long want = a * (a - 1) / 2 + 1LL * (k + t - 1) * (k + t - 1) + k + t;
                CHECK(stk::dense_edge_threshold(n, k, t) == want);
            }
    CHECK_THROWS_AS(stk::dense_edge_threshold(10, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(stk::dense_edge_threshold(10, 2, 0), std::invalid_argument);
}

TEST_CASE("extractor recognizes the extremal family") {
    auto out = stk::constructive_k_ended_tree(stk::extremal_graph({17, 2, 1}), {17, 2, 1});
    REQUIRE(std::holds_alternative<stk::ExtremalCertificate>(out));
    stk::ExtremalCertificate cert = std::get<stk::ExtremalCertificate>(out);
    CHECK(cert.params.n == 17);
    CHECK(cert.outside_neighborhood == 1);

    auto out2 = stk::constructive_k_ended_tree(stk::extremal_graph({23, 3, 1}), {23, 3, 1});
    CHECK(std::holds_alternative<stk::ExtremalCertificate>(out2));
}

TEST_CASE("extractor builds trees on dense closed graphs") {
    auto out = stk::constructive_k_ended_tree(Graph::complete(17), {17, 2, 1});
    REQUIRE(std::holds_alternative<stk::TreeWitness>(out));
    stk::TreeWitness w = std::get<stk::TreeWitness>(out);
    CHECK(w.leaf_count <= 2);
    CHECK(stk::validate_tree(Graph::complete(17), w));

    auto out29 = stk::constructive_k_ended_tree(Graph::complete(29), {29, 3, 2});
    REQUIRE(std::holds_alternative<stk::TreeWitness>(out29));
    CHECK(std::get<stk::TreeWitness>(out29).leaf_count <= 3);

    int built = 0;
    for (int i = 0; built < 3 && i < 40; ++i) {
        Graph g0 = stk::random_graph(17, 0.85, 0xDE5Eu + i, 1);
        Graph gc = stk::closure(g0, 16).graph;
        if (gc.edge_count() < stk::dense_edge_threshold(17, 2, 1)) continue;
        if (stk::is_extremal(gc, {17, 2, 1})) continue;
        auto o = stk::constructive_k_ended_tree(gc, {17, 2, 1});
        REQUIRE(std::holds_alternative<stk::TreeWitness>(o));
        stk::TreeWitness tw = std::get<stk::TreeWitness>(o);
        CHECK(tw.leaf_count <= 2);
        CHECK(stk::validate_tree(gc, tw));
        ++built;
    }
    CHECK(built == 3);
}

TEST_CASE("extractor rejects inputs outside its contract") {
    CHECK_THROWS_AS(stk::constructive_k_ended_tree(Graph::complete(17).without_edge(0, 1), {17, 2, 1}),
                    std::invalid_argument);  // not (n-1)-closed
    CHECK_THROWS_AS(stk::constructive_k_ended_tree(Graph::cycle(17), {17, 2, 1}),
                    std::invalid_argument);  // way below the edge threshold
    CHECK_THROWS_AS(stk::constructive_k_ended_tree(Graph::complete(8), {8, 2, 1}),
                    std::invalid_argument);  // order below the window
}
