#pragma once

#include <vector>

#include "stk/budget.hpp"
#include "stk/graph.hpp"

namespace stk {

// Exact clique/independent-set search outcome.  Status::Budget means the
// node budget ran out: `size`/`witness` then hold the best clique found so
// far, which is only a lower bound.
struct CliqueResult {
    enum class Status { Exact, Budget };
    Status status = Status::Exact;
    int size = 0;
    std::vector<int> witness;
    std::uint64_t nodes = 0;
};

// Branch and bound with a greedy-coloring upper bound.
CliqueResult clique_number(const Graph& g, SearchBudget budget = {});

// Maximum independent set = maximum clique of the complement.
CliqueResult independence_number(const Graph& g, SearchBudget budget = {});

// Largest clique containing every vertex of degree >= (n-1)/2.  Requires the
// graph to be (n-1)-closed (checked), which makes those vertices pairwise
// adjacent and the request well-defined.
CliqueResult high_degree_clique(const Graph& g, SearchBudget budget = {});

// kappa(G): 0 for disconnected graphs and K_1, n-1 for K_n.  Dispatches to
// exhaustive cut enumeration for n <= 12 and to max-flow above.
int vertex_connectivity(const Graph& g);

// both routes exposed so tests can cross-check them
int vertex_connectivity_exhaustive(const Graph& g);
int vertex_connectivity_flow(const Graph& g);

// kappa(g) >= t and n > t
bool is_t_connected(const Graph& g, int t);

}  // namespace stk
