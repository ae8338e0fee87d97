#include "stk/enumerate.hpp"

#include <random>
#include <stdexcept>

#include "stk/invariants.hpp"

namespace stk {

GraphEnumerator::GraphEnumerator(int n, int max_n) : n_(n) {
    if (n < 0 || n > max_n)
        throw std::invalid_argument("GraphEnumerator: n=" + std::to_string(n) +
                                    " above enumeration budget " + std::to_string(max_n));
    total_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph GraphEnumerator::from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

bool GraphEnumerator::next(Graph& out) {
    if (next_mask_ >= total_) return false;
    out = from_mask(n_, next_mask_++);
    return true;
}

Graph random_graph(int n, double p, std::uint64_t seed, int min_connectivity, int attempts) {
    if (n < 0) throw std::invalid_argument("random_graph: negative n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p outside [0,1]");
    if (min_connectivity > (n > 0 ? n - 1 : 0))
        throw std::invalid_argument("random_graph: connectivity floor unreachable");
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };  // uniform in [0,1)
    for (int a = 0; a < attempts; ++a) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit() < p) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        if (min_connectivity <= 0 || vertex_connectivity(g) >= min_connectivity) return g;
    }
    throw std::runtime_error("random_graph: connectivity floor " + std::to_string(min_connectivity) +
                             " not reached in " + std::to_string(attempts) + " attempts");
}

}  // namespace stk
