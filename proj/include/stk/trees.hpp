#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stk/budget.hpp"
#include "stk/extremal.hpp"
#include "stk/graph.hpp"

namespace stk {

// A spanning tree presented as its edge list plus a recounted leaf total.
// Conventions: a single vertex has 0 leaves, a single edge has 2.
struct TreeWitness {
    std::vector<std::pair<int, int>> edges;
    int leaf_count = 0;
};

// full recheck: edges belong to host, acyclic, spanning, leaf count honest
bool validate_tree(const Graph& host, const TreeWitness& w, std::string* why = nullptr);

// count leaves of a tree given as edges over host vertices
int count_leaves(int n, const std::vector<std::pair<int, int>>& edges);

// Exact minimum-leaf spanning tree.  Status::Budget means the exact engine
// was over budget; `witness` then holds the best tree found heuristically
// (possibly none for weird inputs).
struct MinLeafResult {
    enum class Status { Exact, Budget };
    Status status = Status::Exact;
    std::optional<TreeWitness> witness;
    std::uint64_t nodes = 0;
};
MinLeafResult min_leaf_spanning_tree(const Graph& g, SearchBudget budget = {});

// Decision: spanning tree with at most k leaves?  A greedy phase (grow a long
// path, attach the rest) answers fast on easy instances; the exact engine
// settles the rest.  No is only ever reported after an exhaustive search.
struct KTreeDecision {
    enum class Status { Yes, No, Unknown };
    Status status = Status::Unknown;
    std::optional<TreeWitness> witness;
    std::uint64_t nodes = 0;
};
KTreeDecision has_k_ended_tree(const Graph& g, int k, SearchBudget budget = {});

// Hamilton path via the bitmask reachability table, exact for n <= 24.
// Throws BudgetError above that.
std::optional<std::vector<int>> hamilton_path(const Graph& g);

// ---- Hall matchings over an explicit bipartite graph ----

// left side indexed 0..|left|-1; adj[i] lists right-side labels
struct HallMatching {
    std::vector<int> match;  // match[i] = right label paired with left i
};
struct HallViolator {
    std::vector<int> lefts;  // subset S of left indices with |N(S)| < |S|
};
std::variant<HallMatching, HallViolator> hall_matching(const std::vector<std::vector<int>>& adj);

// ---- Hamilton-path machinery over a dominant clique ----

// One bipartite working instance: X outside the clique, its matched partners
// ys inside, and the full X-to-N(X) adjacency.  Self-contained so fixtures
// can be planted without a host graph.
struct MatchingInstance {
    std::vector<int> xs;                      // X, outside the clique
    std::vector<int> ys;                      // ys[i] matched to xs[i], inside the clique
    std::vector<std::vector<int>> x_adj;      // x_adj[i] = clique neighbors of xs[i]
    void validate() const;                    // throws on malformed instances
};

// Alternating paths P_1..P_s.  Each path is a host-vertex sequence
// u,v,u,v,... starting at a matched clique vertex and ending in X; pairs are
// relabeled so path j covers matching pairs breakpoints[j-1]+1 .. breakpoints[j].
struct PathSystem {
    std::vector<std::vector<int>> paths;
    std::vector<int> breakpoints;  // cumulative pair counts i_1 < ... < i_s
    std::vector<int> vs, us;       // relabeled pairs: vs[p] in X matched to us[p]
};

// Greedy alternating-path cover: start at the lowest unused matched pair,
// extend at both ends while possible, repeat on the residual instance.
PathSystem build_path_system(const MatchingInstance& mi);

// machine-check: disjoint paths covering all pairs, alternation, maximality
bool validate_path_system(const MatchingInstance& mi, const PathSystem& ps,
                          std::string* why = nullptr);

// Splice the path system, the spare clique vertices Z = C minus matched, and
// connector vertices into one Hamilton path of g[C union X].  The result is
// re-validated before returning; failures throw AssemblyError.
class AssemblyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
std::vector<int> assemble_hamilton_path(const Graph& g, const std::vector<int>& clique,
                                        const PathSystem& ps, const std::vector<int>& spare);

// Attach each leftover vertex to its first neighbor on the path; leaves can
// only be path endpoints or leftovers, so leaf_count <= 2 + |leftover|.
TreeWitness extend_to_k_ended_tree(const Graph& g, const std::vector<int>& path,
                                   const std::vector<int>& leftover);

// ---- End-to-end extraction on closed dense graphs ----

// Returned instead of a tree when the instance is the extremal configuration:
// the outside part's whole neighborhood has exactly t vertices.
struct ExtremalCertificate {
    Params params;
    int outside_neighborhood = 0;  // |N(V - C)| observed
};

class ConstructiveFailure : public std::runtime_error {
public:
    ConstructiveFailure(const std::string& what, std::string trace_)
        : std::runtime_error(what), trace(std::move(trace_)) {}
    std::string trace;  // stage-by-stage log for debugging
};

// For an (n-1)-closed, t-connected graph with enough edges: walk the
// dominant-clique machinery (max clique, X selection, Hall matching, path
// system, splice, leaf attachment) to an actual spanning tree with at most k
// leaves, or recognize the extremal configuration.  Preconditions checked.
std::variant<TreeWitness, ExtremalCertificate> constructive_k_ended_tree(const Graph& g_closed,
                                                                         const Params& p);

// edge threshold in the dense hypothesis: binom(n-k-t,2) + (k+t-1)^2 + k + t
long long dense_edge_threshold(int n, int k, int t);

// A tree with <= k leaves in the closure pulls back to one in g itself; found
// by exact search in g.  Throws logic_error if the pullback fails (that would
// contradict closure equivalence) and BudgetError when g is too large.
TreeWitness declosure_tree(const Graph& g, int k, SearchBudget budget = {});

}  // namespace stk
