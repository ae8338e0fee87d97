#include <vector>

#include "doctest.h"
#include "stk/closure.hpp"
#include "stk/enumerate.hpp"
#include "stk/graph.hpp"

using stk::Graph;

TEST_CASE("closure cascades on short paths") {
    stk::ClosureResult r3 = stk::closure(Graph::path(3), 2);
    CHECK(r3.graph == Graph::complete(3));
    REQUIRE(r3.trace.added.size() == 1);
    CHECK(r3.trace.added[0].u == 0);
    CHECK(r3.trace.added[0].v == 2);
    CHECK(r3.trace.added[0].degree_sum == 2);

    stk::ClosureResult r4 = stk::closure(Graph::path(4), 3);
    CHECK(r4.graph == Graph::complete(4));
    REQUIRE(r4.trace.added.size() == 3);
    CHECK(r4.trace.added[0].u == 0);
    CHECK(r4.trace.added[0].v == 2);
    CHECK(r4.trace.added[0].degree_sum == 3);
    CHECK(r4.trace.added[1].u == 0);
    CHECK(r4.trace.added[1].v == 3);
    CHECK(r4.trace.added[1].degree_sum == 3);
    CHECK(r4.trace.added[2].u == 1);
    CHECK(r4.trace.added[2].v == 3);
    CHECK(r4.trace.added[2].degree_sum == 4);
}

TEST_CASE("complete graphs are fixed points") {
    for (int l : {0, 3, 10}) {
        stk::ClosureResult r = stk::closure(Graph::complete(5), l);
        CHECK(r.graph == Graph::complete(5));
        CHECK(r.trace.added.empty());
    }
}

TEST_CASE("closure at level zero completes everything") {
    CHECK(stk::closure(Graph::empty_graph(4), 0).graph == Graph::complete(4));
}

TEST_CASE("l-closedness checks") {
    CHECK(stk::is_l_closed(Graph::cycle(5), 5));
    CHECK(!stk::is_l_closed(Graph::path(3), 2));
    CHECK(stk::is_l_closed(Graph::empty_graph(3), 1));
    CHECK(stk::is_l_closed(Graph::star(5), 5));  // leaf pairs sum to 2
    CHECK(stk::closure(Graph::star(5), 5).graph == Graph::star(5));
}

TEST_CASE("closure properties on random graphs") {
    for (int i = 0; i < 12; ++i) {
        int n = 4 + i % 4;
        Graph g = stk::random_graph(n, 0.4, 0xC10u + i);
        for (int l : {0, n - 2, n - 1, n + 1}) {
            if (l < 0) continue;
            stk::ClosureResult r = stk::closure(g, l);

            CHECK(stk::is_l_closed(r.graph, l));
            CHECK(stk::closure(r.graph, l).graph == r.graph);             // idempotent
            CHECK(stk::closure_shuffled(g, l, 0xFEEDu + i) == r.graph);   // order-independent
            CHECK(stk::closure_shuffled(g, l, 0xD00Du + i) == r.graph);
            CHECK(stk::replay_closure(g, r.trace) == r.graph);

            // monotone supergraph
            for (int u = 0; u < n; ++u) {
                CHECK(r.graph.degree(u) >= g.degree(u));
                for (int v = u + 1; v < n; ++v)
                    if (g.adjacent(u, v)) CHECK(r.graph.adjacent(u, v));
            }
            for (const auto& add : r.trace.added) {
                CHECK(add.degree_sum >= l);
                CHECK(!g.adjacent(add.u, add.v));
            }
        }
    }
}
