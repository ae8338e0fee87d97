#pragma once

#include <cstdint>
#include <vector>

#include "stk/graph.hpp"

namespace stk {

// Record of one closure run: every edge added, in order, with the degree sum
// that justified it.  Replaying the trace on the original graph rebuilds the
// closed graph exactly.
struct ClosureTrace {
    struct Addition {
        int u, v;
        int degree_sum;  // deg(u)+deg(v) at the moment the edge was added
    };
    int l = 0;
    std::vector<Addition> added;
};

struct ClosureResult {
    Graph graph;
    ClosureTrace trace;
};

// l-closure: repeatedly join non-adjacent pairs with degree sum >= l until
// none remain.  The result is order-independent; the trace follows a
// canonical worklist order (initial pairs lexicographic, re-examination of
// pairs touching fresh endpoints in FIFO order).
ClosureResult closure(const Graph& g, int l);

// same fixpoint computed under a seeded random scan order; exists so tests
// can confirm order-independence rather than assume it
Graph closure_shuffled(const Graph& g, int l, std::uint64_t seed);

// no non-adjacent pair has degree sum >= l
bool is_l_closed(const Graph& g, int l);

// apply a trace's additions to g in order, re-verifying each step
Graph replay_closure(const Graph& g, const ClosureTrace& trace);

}  // namespace stk
