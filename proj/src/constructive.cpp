#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "stk/closure.hpp"
#include "stk/invariants.hpp"
#include "stk/trees.hpp"

namespace stk {

namespace {

bool contains(const std::vector<int>& sorted_v, int x) {
    return std::binary_search(sorted_v.begin(), sorted_v.end(), x);
}

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool all_distinct(const std::vector<int>& sorted_v) {
    return std::adjacent_find(sorted_v.begin(), sorted_v.end()) == sorted_v.end();
}

}  // namespace

void MatchingInstance::validate() const {
    if (xs.size() != ys.size() || xs.size() != x_adj.size())
        throw std::invalid_argument("matching instance: xs/ys/x_adj sizes differ");
    auto sx = sorted_copy(xs), sy = sorted_copy(ys);
    if (!all_distinct(sx)) throw std::invalid_argument("matching instance: repeated x vertex");
    if (!all_distinct(sy)) throw std::invalid_argument("matching instance: repeated matched vertex");
    for (int y : sy)
        if (contains(sx, y)) throw std::invalid_argument("matching instance: vertex on both sides");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        auto row = sorted_copy(x_adj[i]);
        if (!all_distinct(row)) throw std::invalid_argument("matching instance: repeated neighbor entry");
        for (int c : row)
            if (contains(sx, c))
                throw std::invalid_argument("matching instance: neighbor list reaches into the x side");
        if (!contains(row, ys[i]))
            throw std::invalid_argument("matching instance: matched pair is not an instance edge");
    }
}

PathSystem build_path_system(const MatchingInstance& mi) {
    mi.validate();
    const int p = static_cast<int>(mi.xs.size());
    // edge(a,b): pair a's x vertex is adjacent to pair b's matched vertex,
    // i.e. the path may continue ... ys[a] xs[a] ys[b] xs[b] ...
    std::vector<std::vector<char>> edge(p, std::vector<char>(p, 0));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            if (a != b && std::find(mi.x_adj[a].begin(), mi.x_adj[a].end(), mi.ys[b]) != mi.x_adj[a].end())
                edge[a][b] = 1;

    std::vector<char> used(p, 0);
    std::vector<std::vector<int>> blocks;  // original pair indices in path order
    for (int start = 0; start < p; ++start) {
        if (used[start]) continue;
        used[start] = 1;
        std::vector<int> block{start};
        for (bool grew = true; grew;) {  // tail first, then head, until stuck
            grew = false;
            for (int q = 0; q < p; ++q)
                if (!used[q] && edge[block.back()][q]) {
                    used[q] = 1;
                    block.push_back(q);
                    grew = true;
                    break;
                }
        }
        for (bool grew = true; grew;) {
            grew = false;
            for (int q = 0; q < p; ++q)
                if (!used[q] && edge[q][block.front()]) {
                    used[q] = 1;
                    block.insert(block.begin(), q);
                    grew = true;
                    break;
                }
        }
        blocks.push_back(std::move(block));
    }

    PathSystem ps;
    for (const auto& block : blocks) {
        std::vector<int> path;
        for (int a : block) {
            path.push_back(mi.ys[a]);
            path.push_back(mi.xs[a]);
            ps.us.push_back(mi.ys[a]);
            ps.vs.push_back(mi.xs[a]);
        }
        ps.paths.push_back(std::move(path));
        ps.breakpoints.push_back(static_cast<int>(ps.vs.size()));
    }
    return ps;
}

bool validate_path_system(const MatchingInstance& mi, const PathSystem& ps, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    mi.validate();
    const int p = static_cast<int>(mi.xs.size());
    const int s = static_cast<int>(ps.paths.size());
    if (static_cast<int>(ps.breakpoints.size()) != s) return fail("breakpoints/path count mismatch");
    if (static_cast<int>(ps.vs.size()) != p || static_cast<int>(ps.us.size()) != p)
        return fail("relabeled pair count != instance pair count");
    if (s == 0) return p == 0 ? true : fail("no paths but pairs remain");
    if (ps.breakpoints.back() != p) return fail("breakpoints do not end at the pair count");

    auto orig_of_x = [&](int x) {
        for (int a = 0; a < p; ++a)
            if (mi.xs[a] == x) return a;
        return -1;
    };
    std::vector<char> seen(p, 0);
    int base = 0;
    for (int j = 0; j < s; ++j) {
        const auto& path = ps.paths[j];
        const int hi = ps.breakpoints[j];
        if (hi <= base) return fail("path " + std::to_string(j) + " covers no pairs");
        if (static_cast<int>(path.size()) != 2 * (hi - base))
            return fail("path " + std::to_string(j) + " length disagrees with its breakpoint span");
        for (int i = base; i < hi; ++i) {
            if (path[2 * (i - base)] != ps.us[i] || path[2 * (i - base) + 1] != ps.vs[i])
                return fail("path " + std::to_string(j) + " vertices disagree with relabeled pairs");
            int a = orig_of_x(ps.vs[i]);
            if (a < 0 || mi.ys[a] != ps.us[i])
                return fail("relabeled pair " + std::to_string(i) + " is not an instance pair");
            if (seen[a]) return fail("instance pair used twice");
            seen[a] = 1;
            if (i > base) {  // alternation edge from the previous pair's x vertex
                int prev = orig_of_x(ps.vs[i - 1]);
                const auto& row = mi.x_adj[prev];
                if (std::find(row.begin(), row.end(), ps.us[i]) == row.end())
                    return fail("path " + std::to_string(j) + " uses a non-edge between consecutive pairs");
            }
        }
        base = hi;
    }
    for (int a = 0; a < p; ++a)
        if (!seen[a]) return fail("instance pair missing from the system");

    // maximality: once paths 0..j are laid down, path j must admit no further
    // extension at either end among the still-unused pairs
    std::vector<char> placed(p, 0);
    base = 0;
    for (int j = 0; j < s; ++j) {
        const int hi = ps.breakpoints[j];
        for (int i = base; i < hi; ++i) placed[orig_of_x(ps.vs[i])] = 1;
        int tail = orig_of_x(ps.vs[hi - 1]);
        int head_u = ps.us[base];
        for (int q = 0; q < p; ++q) {
            if (placed[q]) continue;
            const auto& tail_row = mi.x_adj[tail];
            if (std::find(tail_row.begin(), tail_row.end(), mi.ys[q]) != tail_row.end())
                return fail("path " + std::to_string(j) + " is tail-extendable, not maximal");
            const auto& q_row = mi.x_adj[q];
            if (std::find(q_row.begin(), q_row.end(), head_u) != q_row.end())
                return fail("path " + std::to_string(j) + " is head-extendable, not maximal");
        }
        base = hi;
    }
    return true;
}

std::vector<int> assemble_hamilton_path(const Graph& g, const std::vector<int>& clique,
                                        const PathSystem& ps, const std::vector<int>& spare) {
    const int n = g.order();
    auto check = [&](bool ok, const std::string& msg) {
        if (!ok) throw AssemblyError("assemble: " + msg);
    };
    check(!clique.empty(), "empty clique");
    auto cs = sorted_copy(clique);
    check(all_distinct(cs), "repeated clique vertex");
    check(cs.front() >= 0 && cs.back() < n, "clique vertex out of range");
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            check(g.adjacent(cs[i], cs[j]), "clique vertices " + std::to_string(cs[i]) + "," +
                                                std::to_string(cs[j]) + " not adjacent");
    check(!ps.paths.empty(), "empty path system");
    check(ps.paths.size() == ps.breakpoints.size(), "breakpoints/path count mismatch");
    for (int u : ps.us) check(contains(cs, u), "matched vertex outside the clique");
    for (int v : ps.vs) check(!contains(cs, v), "x vertex inside the clique");
    auto zs = sorted_copy(spare);
    check(all_distinct(zs), "repeated spare vertex");
    std::vector<int> matched_plus_spare = ps.us;
    matched_plus_spare.insert(matched_plus_spare.end(), zs.begin(), zs.end());
    check(sorted_copy(matched_plus_spare) == cs, "spare does not complement the matched vertices");

    const int s = static_cast<int>(ps.paths.size());
    std::vector<int> seq;
    if (s == 1) {
        seq = zs;
        seq.insert(seq.end(), ps.paths[0].begin(), ps.paths[0].end());
    } else {
        // connectors c_j between path j's final x vertex and path j+1
        std::vector<int> conn(s - 2, -1);
        std::vector<char> z_used(zs.size(), 0);
        bool greedy_ok = true;
        for (int j = 0; j < s - 2 && greedy_ok; ++j) {
            int endv = ps.paths[j].back();
            greedy_ok = false;
            for (std::size_t zi = 0; zi < zs.size(); ++zi)
                if (!z_used[zi] && g.adjacent(endv, zs[zi])) {
                    z_used[zi] = 1;
                    conn[j] = zs[zi];
                    greedy_ok = true;
                    break;
                }
        }
        if (!greedy_ok) {  // redo all connectors as one bipartite matching
            std::fill(z_used.begin(), z_used.end(), 0);
            std::vector<std::vector<int>> rows(s - 2);
            for (int j = 0; j < s - 2; ++j)
                for (int z : zs)
                    if (g.adjacent(ps.paths[j].back(), z)) rows[j].push_back(z);
            auto res = hall_matching(rows);
            if (std::holds_alternative<HallViolator>(res))
                throw AssemblyError("assemble: no system of distinct connector vertices exists");
            conn = std::get<HallMatching>(res).match;
            for (std::size_t zi = 0; zi < zs.size(); ++zi)
                z_used[zi] = std::find(conn.begin(), conn.end(), zs[zi]) != conn.end();
        }
        seq.assign(ps.paths[s - 1].rbegin(), ps.paths[s - 1].rend());
        for (std::size_t zi = 0; zi < zs.size(); ++zi)
            if (!z_used[zi]) seq.push_back(zs[zi]);
        for (int j = 0; j <= s - 2; ++j) {
            seq.insert(seq.end(), ps.paths[j].begin(), ps.paths[j].end());
            if (j < s - 2) seq.push_back(conn[j]);
        }
    }

    std::vector<int> expected = cs;
    expected.insert(expected.end(), ps.vs.begin(), ps.vs.end());
    check(sorted_copy(seq) == sorted_copy(expected), "spliced sequence does not cover clique + X exactly");
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        check(g.adjacent(seq[i], seq[i + 1]), "spliced sequence breaks at " + std::to_string(seq[i]) +
                                                  "-" + std::to_string(seq[i + 1]));
    return seq;
}

TreeWitness extend_to_k_ended_tree(const Graph& g, const std::vector<int>& path,
                                   const std::vector<int>& leftover) {
    const int n = g.order();
    if (path.empty()) throw std::invalid_argument("extend: empty path");
    std::vector<int> everything = path;
    everything.insert(everything.end(), leftover.begin(), leftover.end());
    auto all = sorted_copy(everything);
    if (!all_distinct(all)) throw std::invalid_argument("extend: repeated vertex");
    if (all.front() < 0 || all.back() >= n) throw std::invalid_argument("extend: vertex out of range");
    TreeWitness w;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.adjacent(path[i], path[i + 1]))
            throw std::invalid_argument("extend: path edge " + std::to_string(path[i]) + "-" +
                                        std::to_string(path[i + 1]) + " missing from the graph");
        w.edges.emplace_back(path[i], path[i + 1]);
    }
    for (int v : leftover) {
        int target = -1;
        for (int u : path)
            if (g.adjacent(u, v)) {
                target = u;
                break;
            }
        if (target < 0)
            throw std::invalid_argument("extend: vertex " + std::to_string(v) +
                                        " has no neighbor on the path");
        w.edges.emplace_back(target, v);
    }
    w.leaf_count = count_leaves(n, w.edges);
    return w;
}

long long dense_edge_threshold(int n, int k, int t) {
    if (k < 2 || t < 1) throw std::invalid_argument("dense_edge_threshold: need k >= 2 and t >= 1");
    long long a = std::max(n - k - t, 0);
    return a * (a - 1) / 2 + static_cast<long long>(k + t - 1) * (k + t - 1) + (k + t);
}

std::variant<TreeWitness, ExtremalCertificate> constructive_k_ended_tree(const Graph& g_closed,
                                                                         const Params& p) {
    p.validate();
    const Graph& g = g_closed;
    const int n = g.order();
    const int k = p.k, t = p.t;
    if (n != p.n) throw std::invalid_argument("constructive: graph order disagrees with parameters");
    if (!is_l_closed(g, n - 1)) throw std::invalid_argument("constructive: graph is not (n-1)-closed");
    if (!is_t_connected(g, t)) throw std::invalid_argument("constructive: graph is not t-connected");
    if (g.edge_count() < dense_edge_threshold(n, k, t))
        throw std::invalid_argument("constructive: graph below the dense edge threshold");
    long long window = std::max(6LL * k + 6 * t - 1, static_cast<long long>(k) * k + static_cast<long long>(k) * t + t + 1);
    if (n < window) throw std::invalid_argument("constructive: order below the dense hypothesis window");

    std::string trace;
    auto stage = [&](const std::string& line) { trace += line + "\n"; };

    CliqueResult cq = high_degree_clique(g);
    if (cq.status != CliqueResult::Status::Exact)
        throw ConstructiveFailure("constructive: clique search over budget", trace);
    std::vector<int> C = sorted_copy(cq.witness);
    stage("clique: size " + std::to_string(C.size()) + ", need >= " + std::to_string(n - k - t + 1));
    if (static_cast<int>(C.size()) < n - k - t + 1)
        throw ConstructiveFailure("constructive: dominant clique smaller than n-k-t+1", trace);

    std::vector<char> in_C(n, 0);
    for (int c : C) in_C[c] = 1;
    std::vector<int> H;
    for (int v = 0; v < n; ++v)
        if (!in_C[v]) H.push_back(v);
    const int h = static_cast<int>(H.size());
    stage("outside: " + std::to_string(h) + " vertices");

    if (h == 0) {  // the whole graph is a clique; any vertex order is a path
        TreeWitness w = extend_to_k_ended_tree(g, C, {});
        return w;
    }

    const int x_size = std::min(t + 1, h);
    std::vector<int> idx(x_size);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> best_idx;
    int best_count = -1;
    while (true) {
        std::vector<char> hit(n, 0);
        int count = 0;
        for (int i : idx)
            g.for_neighbors(H[i], [&](int u) {
                if (in_C[u] && !hit[u]) {
                    hit[u] = 1;
                    ++count;
                }
            });
        if (count > best_count) {
            best_count = count;
            best_idx = idx;
        }
        int i = x_size - 1;
        while (i >= 0 && idx[i] == h - x_size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < x_size; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::vector<int> X;
    for (int i : best_idx) X.push_back(H[i]);
    stage("x set: {" + [&] {
        std::string sxs;
        for (int x : X) sxs += std::to_string(x) + " ";
        return sxs;
    }() + "} sees " + std::to_string(best_count) + " clique vertices");

    std::vector<std::vector<int>> x_adj(X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
        g.for_neighbors(X[i], [&](int u) {
            if (in_C[u]) x_adj[i].push_back(u);
        });

    auto hall = hall_matching(x_adj);
    if (std::holds_alternative<HallViolator>(hall)) {
        std::vector<char> hit(n, 0);
        int outside_nbhd = 0;
        for (int v : H)
            g.for_neighbors(v, [&](int u) {
                if (in_C[u] && !hit[u]) {
                    hit[u] = 1;
                    ++outside_nbhd;
                }
            });
        stage("matching: blocked, outside neighborhood " + std::to_string(outside_nbhd));
        if (is_extremal(g, p)) return ExtremalCertificate{p, outside_nbhd};
        throw ConstructiveFailure("constructive: matching blocked but the graph is not the extremal configuration",
                                  trace);
    }

    MatchingInstance mi{X, std::get<HallMatching>(hall).match, x_adj};
    mi.validate();
    PathSystem ps = build_path_system(mi);
    std::string why;
    if (!validate_path_system(mi, ps, &why))
        throw ConstructiveFailure("constructive: path system rejected: " + why, trace);
    stage("paths: " + std::to_string(ps.paths.size()) + " alternating");

    std::vector<int> spare;
    {
        auto matched = sorted_copy(mi.ys);
        for (int c : C)
            if (!contains(matched, c)) spare.push_back(c);
    }
    std::vector<int> seq;
    try {
        seq = assemble_hamilton_path(g, C, ps, spare);
    } catch (const AssemblyError& e) {
        throw ConstructiveFailure(std::string("constructive: ") + e.what(), trace);
    }
    stage("splice: path of " + std::to_string(seq.size()) + " vertices");

    std::vector<int> leftover;
    {
        auto xsorted = sorted_copy(X);
        for (int v : H)
            if (!contains(xsorted, v)) leftover.push_back(v);
    }
    TreeWitness w;
    bool direct = true;
    for (int v : leftover) {
        bool seen = false;
        for (int u : seq) seen = seen || g.adjacent(u, v);
        direct = direct && seen;
    }
    if (direct) {
        w = extend_to_k_ended_tree(g, seq, leftover);
    } else {
        // chain: a leftover vertex with no path neighbor hangs off an
        // already-attached leftover instead
        stage("attach: chained fallback");
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) w.edges.emplace_back(seq[i], seq[i + 1]);
        std::vector<char> attached(n, 0);
        for (int u : seq) attached[u] = 1;
        std::vector<int> left = leftover;
        while (!left.empty()) {
            bool progressed = false;
            for (auto it = left.begin(); it != left.end();) {
                int target = -1;
                g.for_neighbors(*it, [&](int u) -> bool {
                    if (!attached[u]) return true;  // keep scanning
                    target = u;
                    return false;
                });
                if (target < 0) {
                    ++it;
                    continue;
                }
                w.edges.emplace_back(target, *it);
                attached[*it] = 1;
                it = left.erase(it);
                progressed = true;
            }
            if (!progressed)
                throw ConstructiveFailure("constructive: leftover vertex cannot attach anywhere", trace);
        }
        w.leaf_count = count_leaves(n, w.edges);
    }
    stage("tree: " + std::to_string(w.leaf_count) + " leaves, bound " + std::to_string(k));
    if (w.leaf_count > k)
        throw ConstructiveFailure("constructive: assembled tree has more than k leaves", trace);
    if (!validate_tree(g, w, &why))
        throw ConstructiveFailure("constructive: assembled tree failed validation: " + why, trace);
    return w;
}

}  // namespace stk
