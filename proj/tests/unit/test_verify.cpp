#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "stk/enumerate.hpp"
#include "stk/extremal.hpp"
#include "stk/graph.hpp"
#include "stk/graph_io.hpp"
#include "stk/verify.hpp"

using stk::Graph;
using stk::TheoremReport;
using stk::Tri;
using stk::Verdict;

TEST_CASE("verdict is a pure function of hypothesis and conclusion") {
    CHECK(stk::verdict_of(true, Tri::True) == Verdict::Verified);
    CHECK(stk::verdict_of(true, Tri::False) == Verdict::Counterexample);
    CHECK(stk::verdict_of(true, Tri::Unknown) == Verdict::Unknown);
    CHECK(stk::verdict_of(false, Tri::True) == Verdict::Vacuous);
    CHECK(stk::verdict_of(false, Tri::False) == Verdict::Vacuous);
    CHECK(stk::verdict_of(false, Tri::Unknown) == Verdict::Vacuous);

    CHECK(stk::to_string(Verdict::Counterexample) == "COUNTEREXAMPLE");
    CHECK(stk::to_string(Verdict::Verified) == "Verified");
    CHECK(stk::to_string(Tri::True) == "true");
}

TEST_CASE("degree-sum path condition") {
    CHECK(stk::check_ore(Graph::complete(4)).verdict == Verdict::Verified);
    CHECK(stk::check_ore(Graph::cycle(5)).verdict == Verdict::Verified);  // sums equal n-1
    CHECK(stk::check_ore(Graph::path(4)).verdict == Verdict::Vacuous);
}

TEST_CASE("independence-versus-connectivity path condition") {
    CHECK(stk::check_chvatal_erdos(Graph::complete(5), 1).verdict == Verdict::Verified);
    CHECK(stk::check_chvatal_erdos(Graph::cycle(5), 2).verdict == Verdict::Verified);
    CHECK(stk::check_chvatal_erdos(Graph::star(3), 1).verdict == Verdict::Vacuous);
    CHECK(stk::check_chvatal_erdos(stk::disjoint_union(Graph::complete(3), Graph::complete(2)), 1)
              .verdict == Verdict::Vacuous);
}

TEST_CASE("degree-sum tree condition") {
    CHECK(stk::check_bt_degree_sum(Graph::star(3), 3).verdict == Verdict::Verified);
    CHECK(stk::check_bt_degree_sum(Graph::path(5), 2).verdict == Verdict::Vacuous);
    CHECK(stk::check_bt_degree_sum(Graph::complete(6), 3).verdict == Verdict::Verified);
}

TEST_CASE("independence-bound tree condition") {
    CHECK(stk::check_win(stk::extremal_graph({9, 2, 1}), 2, 1).verdict == Verdict::Vacuous);
    CHECK(stk::check_win(Graph::cycle(6), 2, 2).verdict == Verdict::Verified);
    CHECK(stk::check_win(Graph::complete(4), 2, 1).verdict == Verdict::Verified);
}

TEST_CASE("closure preserves the tree decision") {
    TheoremReport c5 = stk::check_closure_equiv(Graph::cycle(5), 2);
    CHECK(c5.verdict == Verdict::Verified);
    CHECK(c5.conclusion == Tri::True);
    CHECK(stk::check_closure_equiv(Graph::star(5), 3).verdict == Verdict::Verified);

    stk::GraphEnumerator en(5);
    Graph g;
    while (en.next(g)) {
        if (!g.is_connected()) continue;
        for (int k = 2; k <= 4; ++k)
            CHECK(stk::check_closure_equiv(g, k).verdict == Verdict::Verified);
    }
}

TEST_CASE("edge-count theorem on the boundary family") {
    TheoremReport esc = stk::check_thm6(stk::extremal_graph({17, 2, 1}), 2, 1);
    CHECK(esc.verdict == Verdict::Verified);
    CHECK(esc.witness_summary.find("extremal") != std::string::npos);

    CHECK(stk::check_thm6(Graph::complete(17), 2, 1).verdict == Verdict::Verified);
    CHECK(stk::check_thm6(Graph::cycle(17), 2, 1).verdict == Verdict::Vacuous);
    CHECK(stk::check_thm6(Graph::complete(8), 2, 1).verdict == Verdict::Vacuous);  // below window
}

TEST_CASE("spectral theorem on the boundary family") {
    TheoremReport esc = stk::check_thm7(stk::extremal_graph({17, 2, 1}), 2, 1);
    CHECK(esc.verdict == Verdict::Verified);
    CHECK(esc.hypothesis_holds);

    CHECK(stk::check_thm7(Graph::complete(17), 2, 1).verdict == Verdict::Verified);
    CHECK(stk::check_thm7(Graph::cycle(17), 2, 1).verdict == Verdict::Vacuous);

    Graph bumped = stk::extremal_graph({17, 2, 1}).with_edge(15, 16).with_edge(14, 16);
    TheoremReport r = stk::check_thm7(bumped, 2, 1);
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.witness_summary.find("tree") != std::string::npos);
}

TEST_CASE("family refutes smaller leaf bounds") {
    CHECK(stk::check_lemma1(2, 1, 9).verdict == Verdict::Verified);
    CHECK(stk::check_lemma1(3, 2, 12).verdict == Verdict::Verified);
    CHECK(stk::check_lemma1(2, 1, 6).verdict == Verdict::Verified);
}

TEST_CASE("dense closed graphs carry a big clique") {
    TheoremReport ex = stk::check_lemma2(stk::extremal_graph({17, 2, 1}), 2, 1);
    CHECK(ex.verdict == Verdict::Verified);
    CHECK(stk::check_lemma2(Graph::complete(17), 2, 1).verdict == Verdict::Verified);
    CHECK(stk::check_lemma2(Graph::cycle(17), 2, 1).verdict == Verdict::Vacuous);
}

TEST_CASE("spectral bound and edge-deletion monotonicity") {
    CHECK(stk::check_lemma4(Graph::complete(8)).verdict == Verdict::Verified);
    CHECK(stk::check_lemma4(Graph::petersen()).verdict == Verdict::Verified);
    CHECK(stk::check_lemma4(Graph::star(6)).verdict == Verdict::Verified);

    CHECK(stk::check_lemma5_edge(Graph::cycle(5), {0, 1}).verdict == Verdict::Verified);
    CHECK(stk::check_lemma5_edge(Graph::petersen(), {0, 1}).verdict == Verdict::Verified);
    CHECK(stk::check_lemma5_edge(stk::disjoint_union(Graph::complete(3), Graph::complete(3)), {0, 1})
              .verdict == Verdict::Vacuous);
}

TEST_CASE("connectivity-one specialization delegates cleanly") {
    TheoremReport esc = stk::check_corollary1(stk::extremal_graph({17, 2, 1}), 2);
    CHECK(esc.verdict == Verdict::Verified);
    CHECK(esc.claim_id == "C1");
    CHECK(esc.notes.find("connectivity 1") != std::string::npos);

    CHECK(stk::check_corollary1(Graph::complete(17), 2).verdict == Verdict::Verified);
    CHECK(stk::check_corollary1(Graph::complete(16), 2).verdict == Verdict::Vacuous);  // below window
}

TEST_CASE("edge-count threshold is tight exactly at the window foot") {
    TheoremReport a = stk::check_threshold_arithmetic(2, 1);
    CHECK(a.verdict == Verdict::Verified);
    CHECK(a.n == 8);  // k^2 + tk + t + 1
    CHECK(a.claim_id == "T6A");
    CHECK(a.graph_id.find("threshold") != std::string::npos);

    CHECK(stk::check_threshold_arithmetic(3, 2).n == 18);
    for (int k = 2; k <= 6; ++k)
        for (int t = 1; t <= 4; ++t)
            CHECK(stk::check_threshold_arithmetic(k, t).verdict == Verdict::Verified);
}

TEST_CASE("corpus runner is deterministic across worker counts") {
    std::vector<stk::CorpusRecord> records;
    stk::GraphEnumerator en(5);
    Graph g;
    std::uint64_t mask = 0;
    while (en.next(g)) {
        records.push_back({g, stk::CorpusRecord::Source::Enumerated, "mask=" + std::to_string(mask)});
        ++mask;
    }
    std::vector<std::string> claims = {"T1", "T5"};

    stk::VerifyOptions one;
    one.workers = 1;
    std::vector<TheoremReport> a = stk::run_corpus(records, claims, one);
    stk::VerifyOptions many;
    many.workers = 4;
    std::vector<TheoremReport> b = stk::run_corpus(records, claims, many);
    CHECK(stk::reports_to_jsonl(a) == stk::reports_to_jsonl(b));

    stk::Summary s = stk::summarize(a);
    CHECK(s.counterexamples == 0);
    CHECK(s.verified + s.vacuous + s.unknown == int(a.size()));

    CHECK(stk::run_corpus({}, claims, one).empty());
}

TEST_CASE("per-record failures are captured, not fatal") {
    std::vector<stk::CorpusRecord> records = {{Graph(), stk::CorpusRecord::Source::File, "bad"}};
    stk::VerifyOptions opt;
    std::vector<TheoremReport> reports = stk::run_corpus(records, {"T1"}, opt);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].verdict == Verdict::Unknown);
    CHECK(reports[0].notes.find("aborted") != std::string::npos);
}

TEST_CASE("report serialization shapes") {
    CHECK(stk::reports_to_csv({}) ==
          "claim_id,graph_id,n,e,kappa,hypothesis,conclusion,verdict,witness_summary\n");

    TheoremReport r;
    r.claim_id = "T1";
    r.graph_id = "Dhc";
    r.n = 5;
    r.e = 5;
    r.kappa = 2;
    r.hypothesis_holds = true;
    r.conclusion = Tri::True;
    r.verdict = Verdict::Verified;
    r.witness_summary = "path 0,1 2,3";
    r.notes = "none";

    std::string jsonl = stk::reports_to_jsonl({r});
    nlohmann::json parsed = nlohmann::json::parse(jsonl);
    CHECK(parsed["claim_id"] == "T1");
    CHECK(parsed["n"] == 5);
    CHECK(parsed["hypothesis"] == true);
    CHECK(parsed["conclusion"] == "true");
    CHECK(parsed["verdict"] == "Verified");

    std::string csv = stk::reports_to_csv({r});
    CHECK(csv.find("T1,Dhc,5,5,2,true,true,Verified,path 0 1 2 3\n") != std::string::npos);

    TheoremReport cx = r;
    cx.conclusion = Tri::False;
    cx.verdict = Verdict::Counterexample;
    CHECK(stk::reports_to_csv({cx}).find("COUNTEREXAMPLE") != std::string::npos);
    CHECK(stk::summarize({cx}).counterexamples == 1);

    CHECK(stk::to_json(stk::summarize({r})) ==
          "{\"verified\":1,\"vacuous\":0,\"unknown\":0,\"counterexamples\":0}");
}

TEST_CASE("known claims stay stable") {
    const std::vector<std::string>& claims = stk::known_claims();
    CHECK(claims.size() == 13);
    CHECK(std::count(claims.begin(), claims.end(), "T5") == 1);
    CHECK(std::count(claims.begin(), claims.end(), "T6A") == 1);
    CHECK(std::count(claims.begin(), claims.end(), "C1") == 1);
}
