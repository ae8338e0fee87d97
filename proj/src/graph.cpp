#include "stk/graph.hpp"

#include <bit>
#include <stdexcept>

namespace stk {

int Graph::countr_zero64(std::uint64_t x) {
    return std::countr_zero(x);
}

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_vertex(int v, const char* who) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
}

void Graph::set_edge(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::clear_edge(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u, "from_edge_list");
        g.check_vertex(v, "from_edge_list");
        if (u == v) throw std::invalid_argument("from_edge_list: self-loop at " + std::to_string(u));
        g.set_edge(u, v);  // duplicate edges collapse silently
    }
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
    return g;
}

Graph Graph::empty_graph(int n) { return Graph(n); }

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    Graph g = path(n);
    g.set_edge(n - 1, 0);
    return g;
}

Graph Graph::star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star: negative leaf count");
    Graph g(leaves + 1);
    for (int v = 0; v < leaves; ++v) g.set_edge(v, leaves);
    return g;
}

Graph Graph::petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.set_edge(i, (i + 1) % 5);        // outer 5-cycle
        g.set_edge(i, i + 5);              // spokes
        g.set_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

int Graph::edge_count() const {
    long long total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return static_cast<int>(total / 2);
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u, "adjacent");
    check_vertex(v, "adjacent");
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v, "degree");
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) throw std::invalid_argument("min_degree: empty graph");
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    if (n_ == 0) throw std::invalid_argument("max_degree: empty graph");
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v, "neighbors");
    std::vector<int> out;
    for_neighbors(v, [&](int u) { out.push_back(u); });
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u, "with_edge");
    check_vertex(v, "with_edge");
    if (u == v) throw std::invalid_argument("with_edge: self-loop");
    Graph g = *this;
    g.set_edge(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u, "without_edge");
    check_vertex(v, "without_edge");
    Graph g = *this;
    g.clear_edge(u, v);
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) g.set_edge(u, v);
    return g;
}

Graph Graph::induced(std::span<const int> keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) check_vertex(keep[i], "induced");
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (keep[i] == keep[j]) throw std::invalid_argument("induced: repeated vertex");
            if (adjacent(keep[i], keep[j])) g.set_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return g;
}

std::vector<int> Graph::component_ids(int* count) const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for_neighbors(v, [&](int u) {
                if (comp[u] < 0) {
                    comp[u] = next;
                    stack.push_back(u);
                }
            });
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    int count = 0;
    component_ids(&count);
    return count == 1;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n_ + b.n_);
    for (int u = 0; u < a.n_; ++u)
        a.for_neighbors(u, [&](int v) {
            if (u < v) g.set_edge(u, v);
        });
    for (int u = 0; u < b.n_; ++u)
        b.for_neighbors(u, [&](int v) {
            if (u < v) g.set_edge(a.n_ + u, a.n_ + v);
        });
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.n_; ++u)
        for (int v = 0; v < b.n_; ++v) g.set_edge(u, a.n_ + v);
    return g;
}

}  // namespace stk
