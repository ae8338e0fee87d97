#include "stk/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <queue>
#include <stdexcept>

#include "stk/closure.hpp"

namespace stk {

namespace {

using Mask = std::vector<std::uint64_t>;

struct CliqueSearcher {
    int n, words;
    std::vector<Mask> adj;
    std::uint64_t budget, nodes = 0;
    bool exceeded = false;
    std::vector<int> cur, best;

    explicit CliqueSearcher(const Graph& g, std::uint64_t budget_)
        : n(g.order()), words(g.words_per_row()), budget(budget_) {
        adj.resize(n);
        for (int v = 0; v < n; ++v) adj[v].assign(g.row(v), g.row(v) + words);
    }

    static bool test(const Mask& m, int v) { return (m[v / 64] >> (v % 64)) & 1; }
    static void clear(Mask& m, int v) { m[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    static bool empty(const Mask& m) {
        for (auto w : m)
            if (w) return false;
        return true;
    }
    static int lowest(const Mask& m) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) return static_cast<int>(i * 64 + std::countr_zero(m[i]));
        return -1;
    }

    // greedy color classes; emits vertices with nondecreasing color
    void color_order(const Mask& cand, std::vector<int>& order, std::vector<int>& bound) {
        order.clear();
        bound.clear();
        Mask uncolored = cand;
        int c = 0;
        while (!empty(uncolored)) {
            ++c;
            Mask q = uncolored;
            while (!empty(q)) {
                int v = lowest(q);
                order.push_back(v);
                bound.push_back(c);
                clear(uncolored, v);
                clear(q, v);
                for (int w = 0; w < words; ++w) q[w] &= ~adj[v][w];
            }
        }
    }

    void expand(Mask cand) {
        if (++nodes > budget) {
            exceeded = true;
            return;
        }
        if (empty(cand)) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        std::vector<int> order, bound;
        color_order(cand, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (exceeded) return;
            if (cur.size() + bound[i] <= best.size()) return;  // earlier entries bound lower
            int v = order[i];
            Mask next(words);
            for (int w = 0; w < words; ++w) next[w] = cand[w] & adj[v][w];
            cur.push_back(v);
            expand(std::move(next));
            cur.pop_back();
            clear(cand, v);
        }
    }
};

}  // namespace

CliqueResult clique_number(const Graph& g, SearchBudget budget) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("clique_number: empty graph");
    CliqueSearcher s(g, budget.max_nodes);
    Mask all(g.words_per_row(), 0);
    for (int v = 0; v < n; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    s.expand(std::move(all));
    CliqueResult r;
    r.status = s.exceeded ? CliqueResult::Status::Budget : CliqueResult::Status::Exact;
    r.witness = s.best;
    std::sort(r.witness.begin(), r.witness.end());
    r.size = static_cast<int>(r.witness.size());
    r.nodes = s.nodes;
    return r;
}

CliqueResult independence_number(const Graph& g, SearchBudget budget) {
    return clique_number(g.complement(), budget);  // same labels, so witness carries over
}

CliqueResult high_degree_clique(const Graph& g, SearchBudget budget) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("high_degree_clique: empty graph");
    if (!is_l_closed(g, n - 1))
        throw std::invalid_argument("high_degree_clique: graph is not (n-1)-closed");
    std::vector<int> hub;
    for (int v = 0; v < n; ++v)
        if (2 * g.degree(v) >= n - 1) hub.push_back(v);
    for (std::size_t i = 0; i < hub.size(); ++i)
        for (std::size_t j = i + 1; j < hub.size(); ++j)
            if (!g.adjacent(hub[i], hub[j]))
                throw std::logic_error("high_degree_clique: high-degree vertices not pairwise adjacent");
    if (hub.empty()) return clique_number(g, budget);

    // candidates = common neighbors of the hub; max clique there extends the hub
    std::vector<int> common;
    for (int v = 0; v < n; ++v) {
        if (std::find(hub.begin(), hub.end(), v) != hub.end()) continue;
        bool all = true;
        for (int b : hub)
            if (!g.adjacent(v, b)) {
                all = false;
                break;
            }
        if (all) common.push_back(v);
    }
    CliqueResult r;
    if (common.empty()) {
        r.witness = hub;
    } else {
        CliqueResult sub = clique_number(g.induced(common), budget);
        r.status = sub.status;
        r.nodes = sub.nodes;
        r.witness = hub;
        for (int i : sub.witness) r.witness.push_back(common[i]);
    }
    std::sort(r.witness.begin(), r.witness.end());
    r.size = static_cast<int>(r.witness.size());
    return r;
}

namespace {

bool connected_after_removal(const Graph& g, std::uint32_t removed) {
    const int n = g.order();
    int start = -1, kept = 0;
    for (int v = 0; v < n; ++v)
        if (!((removed >> v) & 1)) {
            if (start < 0) start = v;
            ++kept;
        }
    if (kept <= 1) return true;
    std::vector<int> stack{start};
    std::vector<char> seen(n, 0);
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.for_neighbors(v, [&](int u) {
            if (!seen[u] && !((removed >> u) & 1)) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        });
    }
    return reached == kept;
}

// Dinic on the vertex-split network; unit vertex capacities give Menger's
// count of internally disjoint s-t paths.
struct FlowNet {
    struct Edge {
        int to, cap;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> out;
    std::vector<int> level, it;

    explicit FlowNet(int nodes) : out(nodes), level(nodes), it(nodes) {}

    void add(int a, int b, int cap) {
        out[a].push_back(static_cast<int>(edges.size()));
        edges.push_back({b, cap});
        out[b].push_back(static_cast<int>(edges.size()));
        edges.push_back({a, 0});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : out[v])
                if (edges[id].cap > 0 && level[edges[id].to] < 0) {
                    level[edges[id].to] = level[v] + 1;
                    q.push(edges[id].to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = it[v]; i < static_cast<int>(out[v].size()); ++i) {
            int id = out[v][i];
            auto& e = edges[id];
            if (e.cap > 0 && level[e.to] == level[v] + 1) {
                int d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    edges[id ^ 1].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int maxflow(int s, int t, int cap_hint) {
        int flow = 0;
        while (bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            while (int f = dfs(s, t, cap_hint)) flow += f;
        }
        return flow;
    }
};

int local_connectivity(const Graph& g, int s, int t) {
    const int n = g.order();
    const int big = n + 1;
    FlowNet net(2 * n);
    for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (int u = 0; u < n; ++u)
        g.for_neighbors(u, [&](int v) {
            if (u < v) {
                net.add(2 * u + 1, 2 * v, big);
                net.add(2 * v + 1, 2 * u, big);
            }
        });
    return net.maxflow(2 * s + 1, 2 * t, big);
}

bool is_complete(const Graph& g) {
    const int n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

int vertex_connectivity_exhaustive(const Graph& g) {
    const int n = g.order();
    if (n > 30) throw std::invalid_argument("vertex_connectivity_exhaustive: graph too large");
    if (n <= 1) return 0;
    if (is_complete(g)) return n - 1;
    if (!g.is_connected()) return 0;
    int best = n - 1;
    for (std::uint32_t removed = 1; removed < (std::uint32_t{1} << n); ++removed) {
        int c = std::popcount(removed);
        if (c >= best || n - c < 2) continue;
        if (!connected_after_removal(g, removed)) best = c;
    }
    return best;
}

int vertex_connectivity_flow(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (is_complete(g)) return n - 1;
    if (!g.is_connected()) return 0;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.adjacent(s, t)) best = std::min(best, local_connectivity(g, s, t));
    return best;
}

int vertex_connectivity(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("vertex_connectivity: empty graph");
    return g.order() <= 12 ? vertex_connectivity_exhaustive(g) : vertex_connectivity_flow(g);
}

bool is_t_connected(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("is_t_connected: t must be positive");
    return g.order() > t && vertex_connectivity(g) >= t;
}

}  // namespace stk
