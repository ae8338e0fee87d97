#include "stk/extremal.hpp"

#include <stdexcept>

namespace stk {

void Params::validate() const {
    if (k < 2) throw std::invalid_argument("Params: k must be at least 2");
    if (t < 1) throw std::invalid_argument("Params: t must be at least 1");
    if (middle() < 1)
        throw std::invalid_argument("Params: n=" + std::to_string(n) + " too small for k=" +
                                    std::to_string(k) + ", t=" + std::to_string(t) +
                                    " (need n >= k+2t)");
}

std::string Params::tag() const {
    return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",t=" + std::to_string(t) + ")";
}

Graph extremal_graph(const Params& p) {
    p.validate();
    const int m = p.middle(), q = p.independent();
    return join(Graph::complete(p.t), disjoint_union(Graph::complete(m), Graph::empty_graph(q)));
}

long long extremal_edge_count(const Params& p) {
    p.validate();
    const long long a = p.n - p.k - p.t + 1;  // hub + clique block together
    return a * (a - 1) / 2 + static_cast<long long>(p.independent()) * p.t;
}

bool is_extremal(const Graph& g, const Params& p) {
    p.validate();
    const int n = g.order();
    if (n != p.n) return false;
    const int m = p.middle(), q = p.independent();

    // hub = universal vertices; must be exactly t of them
    std::vector<int> hub, rest;
    for (int v = 0; v < n; ++v) (g.degree(v) == n - 1 ? hub : rest).push_back(v);
    if (static_cast<int>(hub.size()) != p.t) return false;

    // the rest must induce K_m plus q isolated vertices
    Graph sub = g.induced(rest);
    std::vector<int> with_edges;
    int isolated = 0;
    for (int v = 0; v < sub.order(); ++v) {
        if (sub.degree(v) == 0)
            ++isolated;
        else
            with_edges.push_back(v);
    }
    if (m == 1) return isolated == m + q && with_edges.empty();
    if (static_cast<int>(with_edges.size()) != m || isolated != q) return false;
    for (std::size_t i = 0; i < with_edges.size(); ++i)
        for (std::size_t j = i + 1; j < with_edges.size(); ++j)
            if (!sub.adjacent(with_edges[i], with_edges[j])) return false;
    return true;
}

}  // namespace stk
