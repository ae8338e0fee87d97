#pragma once

#include <string>

#include "stk/graph.hpp"

namespace stk {

// Parameter triple for the extremal family: a tree-leaf cap k >= 2, a
// connectivity level t >= 1, and an order n large enough that the middle
// clique K_{n-k-2t+1} is nonempty.
struct Params {
    int n = 0, k = 0, t = 0;

    int middle() const { return n - k - 2 * t + 1; }      // clique block size
    int independent() const { return k + t - 1; }         // independent block size
    void validate() const;
    std::string tag() const;  // "(n=..,k=..,t=..)"
};

// K_t joined to (K_{n-k-2t+1} + (k+t-1) isolated vertices).  Layout: hub
// vertices 0..t-1, clique block next, independent block last.
Graph extremal_graph(const Params& p);

// binom(n-k-t+1, 2) + (k+t-1)t, the family's edge count
long long extremal_edge_count(const Params& p);

// Structural recognition (the only isomorphism-flavoured test in the
// toolkit): exactly t universal vertices, and the rest inducing one clique of
// size n-k-2t+1 plus k+t-1 isolated vertices.
bool is_extremal(const Graph& g, const Params& p);

}  // namespace stk
