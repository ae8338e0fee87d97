#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "stk/closure.hpp"
#include "stk/extremal.hpp"
#include "stk/graph.hpp"
#include "stk/invariants.hpp"

using stk::Graph;
using stk::Params;

TEST_CASE("frozen edge counts") {
    CHECK(stk::extremal_edge_count({9, 2, 1}) == 23);
    CHECK(stk::extremal_edge_count({17, 2, 1}) == 107);
    CHECK(stk::extremal_graph({9, 2, 1}).edge_count() == 23);
    CHECK(stk::extremal_graph({17, 2, 1}).edge_count() == 107);
}

TEST_CASE("edge formula matches the built graph") {
    for (int k = 2; k <= 4; ++k)
        for (int t = 1; t <= 3; ++t)
            for (int n = k + 2 * t; n <= 25; ++n) {
                Params p{n, k, t};
                CHECK(stk::extremal_graph(p).edge_count() == stk::extremal_edge_count(p));
            }
}

TEST_CASE("block structure of the family") {
    Params p{9, 2, 1};
    Graph g = stk::extremal_graph(p);
    CHECK(g.order() == 9);
    CHECK(p.middle() == 6);
    CHECK(p.independent() == 2);
    CHECK(g.degree(0) == 8);                   // hub sees everything
    for (int v = 7; v <= 8; ++v) CHECK(g.degree(v) == 1);
    CHECK(!g.adjacent(7, 8));

    CHECK(stk::independence_number(g).size == 3);     // k + t
    CHECK(stk::vertex_connectivity(g) == 1);          // t
    CHECK(stk::vertex_connectivity(stk::extremal_graph({12, 2, 2})) == 2);
    CHECK(stk::is_l_closed(g, 8));                    // family is (n-1)-closed
    CHECK(stk::is_l_closed(stk::extremal_graph({17, 2, 1}), 16));
}

TEST_CASE("recognizer accepts the family and relabelings") {
    Params p{10, 3, 1};
    Graph g = stk::extremal_graph(p);
    CHECK(stk::is_extremal(g, p));

    // reverse the labels
    int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) edges.push_back({n - 1 - u, n - 1 - v});
    Graph rev = Graph::from_edge_list(n, edges);
    CHECK(stk::is_extremal(rev, p));
}

TEST_CASE("recognizer rejects perturbations and wrong parameters") {
    Params p{9, 2, 1};
    Graph g = stk::extremal_graph(p);
    CHECK(!stk::is_extremal(g.with_edge(7, 8), p));
    CHECK(!stk::is_extremal(g.without_edge(0, 7), p));
    CHECK(!stk::is_extremal(g, Params{9, 3, 1}));
    CHECK(!stk::is_extremal(Graph::complete(9), p));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((Params{9, 1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Params{9, 2, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Params{3, 2, 1}.validate()), std::invalid_argument);  // middle empty
    CHECK_NOTHROW((Params{4, 2, 1}.validate()));
    CHECK(Params{9, 2, 1}.tag().find("9") != std::string::npos);
}
