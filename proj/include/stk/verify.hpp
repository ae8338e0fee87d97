#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stk/budget.hpp"
#include "stk/graph.hpp"

namespace stk {

// three-valued conclusion: budgets and non-convergence yield Unknown
enum class Tri { False, True, Unknown };

enum class Verdict { Verified, Vacuous, Counterexample, Unknown };

// pure verdict table: hypothesis fails -> Vacuous; holds with a false
// conclusion -> Counterexample; Unknown conclusions stay Unknown
Verdict verdict_of(bool hypothesis_holds, Tri conclusion);

std::string to_string(Tri v);
std::string to_string(Verdict v);

// One claim evaluated on one instance.  graph_id is the graph6 string (or a
// parameter tag for graph-free claims); notes carry diagnostics and replay
// hints and stay out of the CSV.
struct TheoremReport {
    std::string claim_id;
    std::string graph_id;
    int n = 0;
    long long e = 0;
    int kappa = 0;
    bool hypothesis_holds = false;
    Tri conclusion = Tri::Unknown;
    Verdict verdict = Verdict::Unknown;
    std::string witness_summary;
    std::string notes;
};

struct CorpusRecord {
    Graph graph;
    enum class Source { Enumerated, Sampled, File } source = Source::File;
    std::string provenance;  // enough to regenerate: mask, seed recipe, or file line
};

struct VerifyOptions {
    int k = 2;
    int t = 1;
    double tol = 1e-8;  // spectral hypothesis tolerance; Equal counts as satisfied
    SearchBudget budget{};
    int workers = 1;
    std::uint64_t seed = 1;  // drives per-record edge picks for L5
};

// ---- per-claim checks ----
// Hypotheses are evaluated exactly; conclusions fall back to Unknown when a
// search budget runs out.  Disconnected or out-of-range inputs make the
// hypothesis fail (Vacuous) rather than erroring, except where noted.

// T1: degree sum >= n-1 on non-adjacent pairs forces a hamilton path
TheoremReport check_ore(const Graph& g);
// T2: independence number <= t+1 in a t-connected graph forces a hamilton path
TheoremReport check_chvatal_erdos(const Graph& g, int t);
// T3: degree sum >= n-k+1 on non-adjacent pairs forces a spanning k-ended tree
TheoremReport check_bt_degree_sum(const Graph& g, int k, SearchBudget budget = {});
// T4: independence number <= k+t-1 in a t-connected graph forces one
TheoremReport check_win(const Graph& g, int k, int t, SearchBudget budget = {});
// T5: spanning k-ended trees survive the (n-1)-closure in both directions
TheoremReport check_closure_equiv(const Graph& g, int k, SearchBudget budget = {});
// T6: enough edges force one, except for the extremal configuration's closure
TheoremReport check_thm6(const Graph& g, int k, int t, SearchBudget budget = {});
// T7: spectral radius at least the extremal family's forces one, except for
// the extremal configuration itself
TheoremReport check_thm7(const Graph& g, int k, int t, double tol = 1e-8, SearchBudget budget = {});
// L1: the extremal graph itself has no spanning k-ended tree
TheoremReport check_lemma1(int k, int t, int n, SearchBudget budget = {});
// L2: (n-1)-closed graphs above the edge threshold have a big clique
TheoremReport check_lemma2(const Graph& g, int k, int t, SearchBudget budget = {});
// L4: rho <= the degree/edge bound
TheoremReport check_lemma4(const Graph& g);
// L5: deleting an edge of a connected graph strictly drops rho
TheoremReport check_lemma5_edge(const Graph& g, std::pair<int, int> edge);
// C1: the spectral condition at connectivity one, thresholds re-instantiated
TheoremReport check_corollary1(const Graph& g, int k, double tol = 1e-8, SearchBudget budget = {});
// T6A: the edge threshold is tight at n = k^2 + tk + t + 1, exact integers
TheoremReport check_threshold_arithmetic(int k, int t);

// claim ids accepted by run_corpus and the CLI
const std::vector<std::string>& known_claims();

// Evaluate each claim on each record.  Output is ordered by (record, claim)
// regardless of worker count; per-record failures become Unknown reports with
// the error text in notes.  Counterexample reports gain a replay command.
std::vector<TheoremReport> run_corpus(const std::vector<CorpusRecord>& records,
                                      const std::vector<std::string>& claims,
                                      const VerifyOptions& opt);

// one JSON object per line, fixed key order
std::string reports_to_jsonl(const std::vector<TheoremReport>& reports);
// fixed header: claim_id,graph_id,n,e,kappa,hypothesis,conclusion,verdict,witness_summary
std::string reports_to_csv(const std::vector<TheoremReport>& reports);

struct Summary {
    int verified = 0, vacuous = 0, unknown = 0, counterexamples = 0;
};
Summary summarize(const std::vector<TheoremReport>& reports);
std::string to_json(const Summary& s);

}  // namespace stk
