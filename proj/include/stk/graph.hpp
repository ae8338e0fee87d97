#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stk {

// Simple undirected graph on vertices 0..n-1, adjacency kept as packed bit
// rows (row-major, 64-bit words).  Values are immutable once built: every
// "mutating" operation returns a fresh graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph complete(int n);
    static Graph empty_graph(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    // star with `leaves` leaves; the hub is the last vertex
    static Graph star(int leaves);
    static Graph petersen();

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    int min_degree() const;
    int max_degree() const;
    std::vector<int> neighbors(int v) const;

    // raw bit row access (words_per_row() words starting at row_begin(v))
    int words_per_row() const { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph complement() const;

    // induced subgraph; vertices of the result are indices into `keep`
    Graph induced(std::span<const int> keep) const;

    bool is_connected() const;
    // connected component ids, 0-based, in order of first appearance
    std::vector<int> component_ids(int* count = nullptr) const;

    bool operator==(const Graph& other) const = default;

    // iterate neighbors of v, calling f(u); stops early if f returns false
    template <typename F>
    void for_neighbors(int v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bitsleft = r[w];
            while (bitsleft) {
                int u = w * 64 + countr_zero64(bitsleft);
                if constexpr (std::is_same_v<decltype(f(0)), bool>) {
                    if (!f(u)) return;
                } else {
                    f(u);
                }
                bitsleft &= bitsleft - 1;
            }
        }
    }

private:
    static int countr_zero64(std::uint64_t x);
    void check_vertex(int v, const char* who) const;
    void set_edge(int u, int v);
    void clear_edge(int u, int v);

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;

    friend Graph join(const Graph& a, const Graph& b);
    friend Graph disjoint_union(const Graph& a, const Graph& b);
};

// disjoint union: vertices of b are shifted up by a.order()
Graph disjoint_union(const Graph& a, const Graph& b);

// join: disjoint union plus all edges between the two sides
Graph join(const Graph& a, const Graph& b);

}  // namespace stk
