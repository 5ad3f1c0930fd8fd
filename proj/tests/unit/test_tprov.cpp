#include "doctest.h"
#include "fixtures.hpp"
#include "provmod/decide.hpp"
#include "provmod/tprov.hpp"

using namespace provmod;

namespace {
Formula B(const char* s) { return parse(s, Lang::Box); }
}

TEST_SUITE("tprov") {
TEST_CASE("phrase truth examples") {
    Theory p = finite_axioms_mp({B("p")});
    CHECK_FALSE(phrase_truth(Phrase{{B("[]p")}, {B("[][]p")}}, *p));
    CHECK(phrase_truth(Phrase{{}, {B("[]bot")}}, *finite_axioms_mp({Formula::bot()})));
    CHECK(phrase_truth(Phrase{{B("[]bot")}, {}}, *gl_theorems()));
}

TEST_CASE("bare atoms are inert and flagged") {
    PhraseTrace t = phrase_trace(Phrase{{B("p")}, {B("[]q")}}, *finite_axioms_mp({}));
    CHECK(t.bare_atoms);
    CHECK_FALSE(t.value);
    CHECK(t.antecedent.empty());
}

TEST_CASE("interpretation examples") {
    Theory p = finite_axioms_mp({B("p")});
    CHECK_FALSE(t_interpretation(B("[]p -> [][]p"), *p).truth);
    CHECK(t_interpretation(B("[]p | ~[]p"), *p).truth);
    CHECK(t_interpretation(B("[]p | ~[]p"), *p).trace.empty());
    CHECK(t_interpretation(B("[]([]p -> p) -> []p"), *gl_theorems()).truth);
}

TEST_CASE("classically equivalent formulas get the same interpretation") {
    std::vector<std::pair<const char*, const char*>> pairs{{"[]p -> [][]p", "~[][]p -> ~[]p"},
                                                           {"[]p & []q", "~(~[]p | ~[]q)"},
                                                           {"[]bot | []p", "~[]bot -> []p"}};
    std::vector<Theory> ts{gl_theorems(), gl_n(1), finite_axioms_mp({B("p")}), finite_axioms_mp({})};
    for (auto [a, b] : pairs)
        for (const auto& t : ts) CHECK(t_interpretation(B(a), *t).truth == t_interpretation(B(b), *t).truth);
}

TEST_CASE("incompleteness witnesses") {
    CHECK(incompleteness_witness(*finite_axioms_mp({Formula::bot()})) == B("[]bot"));
    CHECK(incompleteness_witness(*gl_theorems()) == B("~[]bot"));
    CHECK(incompleteness_witness(*finite_axioms_mp({})) == B("~[]bot"));
}

TEST_CASE("soundness gate") {
    auto corpus = fixtures::gl_corpus20();
    GateReport g = soundness_gate(*gl_theorems(), corpus);
    CHECK(g.gates_passed());
    CHECK(g.forward_holds);
    for (const auto& [a, v] : g.corpus) CHECK(v);
    GateReport g1 = soundness_gate(*gl_n(1), corpus);
    CHECK(g1.gates_passed());
    GateReport bad = soundness_gate(*finite_axioms_mp({B("p")}), corpus);
    CHECK_FALSE(bad.nec_closed.passed);
    bool four = false;
    for (const auto& [gate, f] : bad.probes)
        if (gate == "nec" && f == B("[]p -> [][]p")) four = true;
    CHECK(four);
    CHECK_THROWS_AS(soundness_gate(*gl_theorems(), {B("[]p -> p")}), std::invalid_argument);
}
}
