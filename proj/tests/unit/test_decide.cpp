#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "provmod/decide.hpp"

using namespace provmod;

namespace {
Formula B(const char* s) { return parse(s, Lang::Box); }
Formula R(const char* s) { return parse(s, Lang::Rhd); }
}  // namespace

TEST_SUITE("decide") {
TEST_CASE("GL examples") {
    CHECK(decide_gl(B("[]([]p -> p) -> []p")).status == Status::Theorem);
    DecisionVerdict v = decide_gl(B("[]p -> p"));
    REQUIRE(v.status == Status::NonTheorem);
    REQUIRE(v.countermodel);
    CHECK_FALSE(forces(*v.countermodel, v.world, B("[]p -> p")));
    FrameReport r = check_frame(v.countermodel->frame);
    CHECK(r.irreflexive.holds);
    CHECK(r.transitive.holds);
    CHECK(v.countermodel->size() == 1);
}

TEST_CASE("K, K4 and S4 examples") {
    CHECK(decide_s4(B("[]p -> p")).status == Status::Theorem);
    CHECK(decide_k(B("[]p -> [][]p")).status == Status::NonTheorem);
    CHECK(decide_k4(B("[]p -> [][]p")).status == Status::Theorem);
    CHECK(decide_k4(B("[]([]p -> p) -> []p")).status == Status::NonTheorem);
    DecisionVerdict s = decide_s4(B("p -> []p"));
    REQUIRE(s.countermodel);
    CHECK(check_frame(s.countermodel->frame).reflexive.holds);
    CHECK(decide(ModalLogic::K, B("[](p -> q) -> []p -> []q")).status == Status::Theorem);
}

TEST_CASE("GL agrees with tree search on random formulas") {
    std::mt19937 rng(31);
    for (int i = 0; i < 150; ++i) {
        Formula a = oracle::random_formula(rng, {"p", "q"}, 1, Lang::Box, false, 6);
        if (modal_subformulas(a).size() > 3) continue;
        DecisionVerdict v = decide_gl(a);
        CHECK((v.status == Status::Theorem) == !oracle::gl_refutable_small(a, 4));
        if (v.countermodel) CHECK_FALSE(forces(*v.countermodel, v.world, a));
    }
}

TEST_CASE("finite premise consequence") {
    CHECK(gl_consequence({B("[]p")}, B("[]p")));
    CHECK_FALSE(gl_consequence({B("p")}, B("[]p")));
    CHECK(gl_consequence({B("[]([]p -> p)")}, B("[]p")));
}

TEST_CASE("bounded-height checks") {
    CHECK(finfals_check(B("[]([]p -> p) -> []p"), 4).agrees);
    FinfalsResult r = finfals_check(B("p"), 4);
    CHECK(r.least_failing_k == 1);
    CHECK(finfals_check(B("top"), 4).agrees);
    CHECK_FALSE(finfals_check(B("top"), 4).least_failing_k);
    CHECK(finfals_check(B("~[]bot"), 4).least_failing_k == 1);
    CHECK(finfals_check(B("[][]bot -> []bot"), 4).least_failing_k == 2);
}

TEST_CASE("ILM search examples") {
    CHECK(decide_ilm(R("<>p |> p"), 3).status == Status::NonTheoremUpToBoundUnknown);
    DecisionVerdict v = decide_ilm(R("p |> q"), 2);
    REQUIRE(v.status == Status::NonTheorem);
    REQUIRE(v.veltman_countermodel);
    CHECK(v.veltman_countermodel->size() == 2);
    CHECK_FALSE(veltman_forces(*v.veltman_countermodel, v.world, R("p |> q")));
    CHECK(decide_ilm(R("(p |> q) -> ([]r & p |> []r & q)"), 3).status == Status::NonTheoremUpToBoundUnknown);
    CHECK(decide_ilm(R("[]p -> p"), 2).status == Status::NonTheorem);
}

TEST_CASE("frame enumeration counts") {
    // rooted unlabelled trees: 1, 1, 2, 4, 9 on 1..5 nodes
    CHECK(transitive_trees(1).size() == 1);
    CHECK(transitive_trees(3).size() == 1 + 1 + 2);
    CHECK(transitive_trees(4).size() == 8);
    CHECK(plain_trees(5).size() == 17);
    CHECK(all_valuations(3, {"p", "q"}).size() == 64);
}

TEST_CASE("GL representatives") {
    RepresentativeSet r0 = representatives_gl(0, {"p"});
    REQUIRE(r0.members.size() == 1);
    CHECK(r0.members[0].is_bot());
    RepresentativeSet r1 = representatives_gl(1, {"p"});
    CHECK(r1.members.size() == 4);
    for (const char* s : {"bot", "top", "p", "~p"}) {
        int hits = 0;
        for (const auto& m : r1.members)
            hits += decide_gl(Formula::imp(B("[]bot"), Formula::iff(m, B(s)))).status == Status::Theorem;
        CHECK(hits == 1);
    }
    CHECK(representatives_gl(1, {}).members.size() == 2);
    CHECK(representatives_gl(2, {"p"}).members.size() == 256);
    CHECK_THROWS_AS(representatives_gl(3, {"p"}), EnvelopeError);
    CHECK_THROWS_AS(representatives_gl(2, {"p", "q"}), EnvelopeError);
}

TEST_CASE("ILM representatives") {
    CHECK(representatives_ilm(0, {}).members.size() == 1);
    CHECK(representatives_ilm(1, {}).members.size() == 2);
    CHECK(representatives_ilm(1, {"p"}).members.size() == 4);
}
}
