#include "stk/closure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

namespace stk {

namespace {

void check_l(int l) {
    if (l < 0) throw std::invalid_argument("closure: l must be nonnegative");
}

}  // namespace

ClosureResult closure(const Graph& g, int l) {
    check_l(l);
    const int n = g.order();
    Graph cur = g;
    std::vector<int> deg = g.degrees();
    ClosureTrace trace;
    trace.l = l;

    std::deque<std::pair<int, int>> queue;
    std::vector<char> queued(static_cast<std::size_t>(n) * n, 0);
    auto push = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (cur.adjacent(u, v) || queued[static_cast<std::size_t>(u) * n + v]) return;
        queued[static_cast<std::size_t>(u) * n + v] = 1;
        queue.emplace_back(u, v);
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) push(u, v);

    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        queued[static_cast<std::size_t>(u) * n + v] = 0;
        if (cur.adjacent(u, v)) continue;
        if (deg[u] + deg[v] < l) continue;
        trace.added.push_back({u, v, deg[u] + deg[v]});
        cur = cur.with_edge(u, v);
        ++deg[u];
        ++deg[v];
        // fresh degrees may qualify previously rejected pairs at the endpoints
        for (int x = 0; x < n; ++x) {
            if (x != u && !cur.adjacent(u, x)) push(u, x);
            if (x != v && !cur.adjacent(v, x)) push(v, x);
        }
    }
    return {std::move(cur), std::move(trace)};
}

Graph closure_shuffled(const Graph& g, int l, std::uint64_t seed) {
    check_l(l);
    const int n = g.order();
    Graph cur = g;
    std::vector<int> deg = g.degrees();
    std::mt19937_64 rng(seed);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!cur.adjacent(u, v)) pairs.emplace_back(u, v);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (auto [u, v] : pairs) {
            if (!cur.adjacent(u, v) && deg[u] + deg[v] >= l) {
                cur = cur.with_edge(u, v);
                ++deg[u];
                ++deg[v];
                changed = true;
            }
        }
    }
    return cur;
}

bool is_l_closed(const Graph& g, int l) {
    check_l(l);
    const int n = g.order();
    std::vector<int> deg = g.degrees();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && deg[u] + deg[v] >= l) return false;
    return true;
}

Graph replay_closure(const Graph& g, const ClosureTrace& trace) {
    Graph cur = g;
    std::vector<int> deg = g.degrees();
    for (const auto& a : trace.added) {
        if (cur.adjacent(a.u, a.v))
            throw std::invalid_argument("replay_closure: edge already present");
        if (deg[a.u] + deg[a.v] != a.degree_sum || a.degree_sum < trace.l)
            throw std::invalid_argument("replay_closure: degree sum mismatch");
        cur = cur.with_edge(a.u, a.v);
        ++deg[a.u];
        ++deg[a.v];
    }
    return cur;
}

}  // namespace stk
