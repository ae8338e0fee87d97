#pragma once

#include <cstdint>
#include <functional>

#include "stk/graph.hpp"

namespace stk {

// All 2^binom(n,2) labeled graphs on n vertices, streamed in mask order.
// Pair bits follow the column-major upper-triangle order (0,1),(0,2),(1,2),
// (0,3),...  so mask i is reproducible and the range can be partitioned.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n, int max_n = 7);

    std::uint64_t total() const { return total_; }
    // next graph in mask order, or false when exhausted
    bool next(Graph& out);

    static Graph from_mask(int n, std::uint64_t mask);

private:
    int n_;
    std::uint64_t next_mask_ = 0, total_;
};

// G(n,p) with a fixed word-to-double mapping so results are identical across
// platforms for a given seed.  Rejection-samples until the connectivity floor
// holds; throws after `attempts` failures.
Graph random_graph(int n, double p, std::uint64_t seed, int min_connectivity = 0,
                   int attempts = 1000);

}  // namespace stk
