#include "stk/trees.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "stk/closure.hpp"

namespace stk {

int count_leaves(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        ++deg.at(u);
        ++deg.at(v);
    }
    int leaves = 0;
    for (int d : deg) leaves += (d == 1);
    return leaves;
}

bool validate_tree(const Graph& host, const TreeWitness& w, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = host.order();
    if (static_cast<int>(w.edges.size()) != n - 1 && !(n == 0 && w.edges.empty()))
        return fail("edge count " + std::to_string(w.edges.size()) + " != n-1");
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : w.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) return fail("edge endpoint out of range");
        if (!host.adjacent(u, v))
            return fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in host");
        int ru = find(u), rv = find(v);
        if (ru == rv) return fail("cycle through (" + std::to_string(u) + "," + std::to_string(v) + ")");
        parent[ru] = rv;
    }
    // n-1 acyclic edges on n vertices span and connect automatically
    if (w.leaf_count != count_leaves(n, w.edges))
        return fail("leaf_count " + std::to_string(w.leaf_count) + " does not match recount");
    return true;
}

namespace {

constexpr int kDpMaxVertices = 26;  // 4-byte slot per subset; 26 is already 256 MiB a layer

// Reachability table for trees built as "a path, plus paths grafted on".
// reach[j][S] holds the endpoint bits v such that some tree on vertex set S
// exists consisting of j paths (first free-standing, later ones rooted at an
// existing vertex) whose last path is still open at v.  A tree made of j
// paths has at most j+1 leaves, and every tree with L leaves decomposes into
// L-1 such paths, so min-leaf = 1 + (smallest feasible j).
struct PathAttachTable {
    int n = 0;
    std::uint32_t full = 0;
    std::vector<std::uint32_t> adj;
    std::vector<std::uint32_t> nbhd;  // union of adj over the members of each subset
    std::vector<std::vector<std::uint32_t>> reach;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes = 0;

    bool init(const Graph& g, std::uint64_t budget) {
        n = g.order();
        max_nodes = budget;
        if (n > kDpMaxVertices) return false;
        if ((std::uint64_t{2} << n) > budget) return false;  // one layer must fit
        full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
        adj.assign(n, 0);
        for (int v = 0; v < n; ++v)
            g.for_neighbors(v, [&](int u) { adj[v] |= std::uint32_t{1} << u; });
        nbhd.assign(std::size_t{1} << n, 0);
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            std::uint32_t low = mask & (~mask + 1);
            nbhd[mask] = nbhd[mask ^ low] | adj[std::countr_zero(low)];
        }
        return true;
    }

    // build layer j (1-based); false when the node budget runs out
    bool grow_layer() {
        const std::uint64_t cost = std::uint64_t{2} << n;
        if (nodes + cost > max_nodes) return false;
        nodes += cost;
        std::vector<std::uint32_t> layer(std::size_t{1} << n, 0);
        if (reach.empty()) {
            for (int a = 0; a < n; ++a) layer[std::uint32_t{1} << a] = std::uint32_t{1} << a;
        } else {
            // close the previous layer's open path anywhere, then root a new
            // path at any vertex already in the set
            const auto& prev = reach.back();
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                if (!prev[mask]) continue;
                std::uint32_t ext = nbhd[mask] & ~mask;
                while (ext) {
                    std::uint32_t u = ext & (~ext + 1);
                    layer[mask | u] |= u;
                    ext ^= u;
                }
            }
        }
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            std::uint32_t ends = layer[mask];
            if (!ends) continue;
            std::uint32_t u = 0;
            for (std::uint32_t e = ends; e;) {
                std::uint32_t low = e & (~e + 1);
                u |= adj[std::countr_zero(low)];
                e ^= low;
            }
            u &= ~mask;
            while (u) {
                std::uint32_t b = u & (~u + 1);
                layer[mask | b] |= b;  // the new endpoint is adjacent to some open end
                u ^= b;
            }
        }
        reach.push_back(std::move(layer));
        return true;
    }

    bool feasible() const { return !reach.empty() && reach.back()[full] != 0; }

    // walk the table backwards into an explicit edge list
    std::vector<std::pair<int, int>> reconstruct() const {
        std::vector<std::pair<int, int>> edges;
        int j = static_cast<int>(reach.size());
        std::uint32_t mask = full;
        std::uint32_t vbit = reach[j - 1][mask] & (~reach[j - 1][mask] + 1);
        while (true) {
            int v = std::countr_zero(vbit);
            std::uint32_t prev_mask = mask ^ vbit;
            if (!prev_mask) break;  // v is the root of the very first path
            std::uint32_t from = reach[j - 1][prev_mask] & adj[v];
            if (from) {  // the open path simply grew from u to v
                std::uint32_t ubit = from & (~from + 1);
                edges.emplace_back(std::countr_zero(ubit), v);
                mask = prev_mask;
                vbit = ubit;
                continue;
            }
            // v started a fresh path rooted at some earlier vertex w
            std::uint32_t wbits = adj[v] & prev_mask;
            edges.emplace_back(std::countr_zero(wbits & (~wbits + 1)), v);
            --j;
            mask = prev_mask;
            vbit = reach[j - 1][mask] & (~reach[j - 1][mask] + 1);
        }
        return edges;
    }
};

// --- greedy incumbent: long path by rotation, then leaf-friendly attachment ---

std::vector<int> grow_path_from(const Graph& g, int start) {
    const int n = g.order();
    std::vector<int> path{start};
    std::vector<char> in_path(n, 0);
    in_path[start] = 1;

    auto pick_outside = [&](int v) {
        int best = -1, best_deg = -1;
        g.for_neighbors(v, [&](int u) {
            if (!in_path[u] && g.degree(u) > best_deg) {
                best = u;
                best_deg = g.degree(u);
            }
        });
        return best;
    };

    for (int side = 0; side < 2; ++side) {
        int rotations = 2 * n;
        while (true) {
            int tail = path.back();
            int u = pick_outside(tail);
            if (u >= 0) {
                path.push_back(u);
                in_path[u] = 1;
                continue;
            }
            if (rotations-- <= 0) break;
            // rotation: tail's neighbor path[i] lets the suffix flip, making
            // path[i+1] the new tail; take the first flip that can extend
            bool rotated = false;
            std::vector<int> pos(n, -1);
            for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
            for (std::size_t i = 0; i + 2 < path.size() && !rotated; ++i) {
                if (!g.adjacent(tail, path[i])) continue;
                int new_tail = path[i + 1];
                if (pick_outside(new_tail) < 0) continue;
                std::reverse(path.begin() + i + 1, path.end());
                rotated = true;
            }
            if (!rotated) break;
        }
        std::reverse(path.begin(), path.end());  // now work on the other end
    }
    return path;
}

std::optional<TreeWitness> greedy_tree(const Graph& g) {
    const int n = g.order();
    if (n == 0 || !g.is_connected()) return std::nullopt;
    if (n == 1) return TreeWitness{{}, 0};

    int max_v = 0, min_v = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > g.degree(max_v)) max_v = v;
        if (g.degree(v) < g.degree(min_v)) min_v = v;
    }
    std::vector<int> starts{max_v, min_v, 0};
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

    std::optional<TreeWitness> best;
    for (int s : starts) {
        std::vector<int> path = grow_path_from(g, s);
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
        std::vector<int> tree_deg(n, 0);
        std::vector<char> attached(n, 0);
        for (int v : path) attached[v] = 1;
        for (auto [u, v] : edges) ++tree_deg[u], ++tree_deg[v];

        std::vector<int> left;
        for (int v = 0; v < n; ++v)
            if (!attached[v]) left.push_back(v);
        while (!left.empty()) {
            bool progressed = false;
            for (auto it = left.begin(); it != left.end();) {
                int v = *it;
                int target = -1;
                g.for_neighbors(v, [&](int u) {
                    if (!attached[u]) return;
                    if (target < 0 || (tree_deg[u] == 1 && tree_deg[target] != 1)) target = u;
                });
                if (target < 0) {
                    ++it;
                    continue;
                }
                edges.emplace_back(target, v);
                ++tree_deg[target];
                ++tree_deg[v];
                attached[v] = 1;
                it = left.erase(it);
                progressed = true;
            }
            if (!progressed) return std::nullopt;  // unreachable for connected g
        }
        TreeWitness w{std::move(edges), 0};
        w.leaf_count = count_leaves(n, w.edges);
        if (!best || w.leaf_count < best->leaf_count) best = std::move(w);
    }
    return best;
}

}  // namespace

MinLeafResult min_leaf_spanning_tree(const Graph& g, SearchBudget budget) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("min_leaf_spanning_tree: empty graph");
    if (!g.is_connected()) throw std::invalid_argument("min_leaf_spanning_tree: disconnected graph");
    MinLeafResult r;
    if (n == 1) {
        r.witness = TreeWitness{{}, 0};
        return r;
    }
    if (n == 2) {
        r.witness = TreeWitness{{{0, 1}}, 2};
        return r;
    }
    PathAttachTable table;
    if (table.init(g, budget.max_nodes)) {
        for (int j = 1; j <= n - 1; ++j) {
            if (!table.grow_layer()) break;
            if (table.feasible()) {
                TreeWitness w{table.reconstruct(), 0};
                w.leaf_count = count_leaves(n, w.edges);
                r.witness = std::move(w);
                r.nodes = table.nodes;
                return r;
            }
        }
    }
    r.status = MinLeafResult::Status::Budget;
    r.nodes = table.nodes;
    r.witness = greedy_tree(g);  // best effort, an upper bound only
    return r;
}

KTreeDecision has_k_ended_tree(const Graph& g, int k, SearchBudget budget) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("has_k_ended_tree: empty graph");
    if (k < 2) throw std::invalid_argument("has_k_ended_tree: k must be at least 2");
    if (!g.is_connected()) throw std::invalid_argument("has_k_ended_tree: disconnected graph");
    KTreeDecision d;
    if (n <= 2) {
        d.status = KTreeDecision::Status::Yes;
        d.witness = n == 1 ? TreeWitness{{}, 0} : TreeWitness{{{0, 1}}, 2};
        return d;
    }
    if (auto w = greedy_tree(g); w && w->leaf_count <= k) {
        d.status = KTreeDecision::Status::Yes;
        d.witness = std::move(w);
        return d;
    }
    PathAttachTable table;
    if (!table.init(g, budget.max_nodes)) {
        d.status = KTreeDecision::Status::Unknown;
        d.witness = greedy_tree(g);
        return d;
    }
    const int max_layer = std::min(k - 1, n - 1);
    for (int j = 1; j <= max_layer; ++j) {
        if (!table.grow_layer()) {
            d.status = KTreeDecision::Status::Unknown;
            d.witness = greedy_tree(g);
            d.nodes = table.nodes;
            return d;
        }
        if (table.feasible()) {
            TreeWitness w{table.reconstruct(), 0};
            w.leaf_count = count_leaves(n, w.edges);
            d.status = KTreeDecision::Status::Yes;
            d.witness = std::move(w);
            d.nodes = table.nodes;
            return d;
        }
    }
    d.status = KTreeDecision::Status::No;
    d.nodes = table.nodes;
    return d;
}

std::optional<std::vector<int>> hamilton_path(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("hamilton_path: empty graph");
    if (n > 24) throw BudgetError("hamilton_path: n=" + std::to_string(n) + " above the 24-vertex table budget");
    if (n == 1) return std::vector<int>{0};
    if (!g.is_connected()) return std::nullopt;
    PathAttachTable table;
    table.init(g, std::uint64_t{4} << 24);
    table.grow_layer();
    if (!table.feasible()) return std::nullopt;
    // endpoints-only reconstruction gives the vertex order directly
    std::vector<int> seq;
    std::uint32_t mask = table.full;
    std::uint32_t vbit = table.reach[0][mask] & (~table.reach[0][mask] + 1);
    while (mask) {
        int v = std::countr_zero(vbit);
        seq.push_back(v);
        mask ^= vbit;
        if (!mask) break;
        std::uint32_t from = table.reach[0][mask] & table.adj[v];
        vbit = from & (~from + 1);
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

std::variant<HallMatching, HallViolator> hall_matching(const std::vector<std::vector<int>>& adj) {
    const int left = static_cast<int>(adj.size());
    std::vector<int> labels;
    for (const auto& row : adj)
        for (int r : row) labels.push_back(r);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto right_index = [&](int label) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };
    const int right = static_cast<int>(labels.size());

    std::vector<int> match_left(left, -1), match_right(right, -1);
    std::vector<char> visited(right, 0);
    auto augment = [&](auto&& self, int i) -> bool {
        for (int label : adj[i]) {
            int r = right_index(label);
            if (visited[r]) continue;
            visited[r] = 1;
            if (match_right[r] < 0 || self(self, match_right[r])) {
                match_left[i] = r;
                match_right[r] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < left; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(augment, i)) continue;
        // Koenig: the visited right set R* is fully matched, and {i} plus the
        // owners of R* sees exactly R*, one short of its own size
        HallViolator v;
        v.lefts.push_back(i);
        for (int r = 0; r < right; ++r)
            if (visited[r]) v.lefts.push_back(match_right[r]);
        std::sort(v.lefts.begin(), v.lefts.end());
        return v;
    }
    HallMatching m;
    m.match.resize(left);
    for (int i = 0; i < left; ++i) m.match[i] = labels[match_left[i]];
    return m;
}

TreeWitness declosure_tree(const Graph& g, int k, SearchBudget budget) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("declosure_tree: empty graph");
    Graph closed = closure(g, n - 1).graph;
    KTreeDecision in_closure = has_k_ended_tree(closed, k, budget);
    if (in_closure.status == KTreeDecision::Status::Unknown)
        throw BudgetError("declosure_tree: closure-side search over budget");
    if (in_closure.status == KTreeDecision::Status::No)
        throw std::invalid_argument("declosure_tree: closure admits no such tree");
    KTreeDecision here = has_k_ended_tree(g, k, budget);
    if (here.status == KTreeDecision::Status::Unknown)
        throw BudgetError("declosure_tree: original-side search over budget");
    if (here.status == KTreeDecision::Status::No)
        throw std::logic_error(
            "declosure_tree: tree exists in the closure but not the graph -- closure equivalence is violated");
    return *here.witness;
}

}  // namespace stk
