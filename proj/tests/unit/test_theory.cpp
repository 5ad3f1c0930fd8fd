#include <memory>

#include "doctest.h"
#include "provmod/decide.hpp"
#include "provmod/theory.hpp"

using namespace provmod;

namespace {
Formula B(const char* s) { return parse(s, Lang::Box); }
}

TEST_SUITE("theory") {
TEST_CASE("finite axioms under modus ponens") {
    Theory t = finite_axioms_mp({B("p")});
    CHECK(t->derives(B("p")));
    CHECK_FALSE(t->derives(B("[]p")));
    CHECK(finite_axioms_mp({})->derives(B("[]p -> []p")));
    Theory bot = finite_axioms_mp({Formula::bot()});
    for (const char* s : {"p", "[]p", "bot", "[][]q"}) CHECK(bot->derives(B(s)));
    CHECK(t->has_rule(RuleTag::Mp));
    CHECK_FALSE(t->has_rule(RuleTag::Nec));
    CHECK(t->provenance() == Provenance::FiniteAxiomsMp);
}

TEST_CASE("Kripke world theories") {
    auto k = std::make_shared<const KripkeModel>(
        KripkeModel::make({"w0", "w1"}, {{"w0", "w1"}}, {{"w1", {"p"}}}));
    Theory leaf = kripke_world_theory(k, 1, true);
    CHECK(leaf->derives(B("p & []bot")));
    CHECK_FALSE(leaf->derives(B("bot")));
    CHECK(leaf->has_rule(RuleTag::Nec));
    Theory root = kripke_world_theory(k, 0, true);
    CHECK(root->derives(B("[]p")));
    CHECK_FALSE(root->derives(B("p")));
    auto k3 = std::make_shared<const KripkeModel>(
        KripkeModel::make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}, {{"b", {"p"}}, {"c", {"p"}}}));
    CHECK(kripke_world_theory(k3, 1, true)->derives(B("[]p")));
    Theory plain = kripke_world_theory(k, 0, false);
    CHECK(plain->derives(B("[]p")));
    CHECK_FALSE(plain->derives(B("p")));
    auto loop = std::make_shared<const KripkeModel>(KripkeModel::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {}));
    CHECK_THROWS(kripke_world_theory(loop, 1, true));
}

TEST_CASE("GL and its bounded-height extensions") {
    CHECK(gl_theorems()->derives(B("[]([]p -> p) -> []p")));
    CHECK(gl_n(0)->derives(B("bot")));
    CHECK(gl_n(1)->derives(B("[]p")));
    CHECK_FALSE(gl_n(1)->derives(B("p")));
    CHECK(gl_n(2)->derives(B("[][]bot")));
    CHECK_FALSE(gl_n(2)->derives(B("[]bot")));
    CHECK(gl_theorems()->has_rule(RuleTag::Loeb));
}

TEST_CASE("derivation results are stable under repetition") {
    Theory t = gl_n(2);
    for (int i = 0; i < 3; ++i) {
        CHECK(t->derives(B("[][]p")));
        CHECK_FALSE(t->derives(B("[]p")));
    }
}

TEST_CASE("classicality checks") {
    CHECK(classicality_violation(*finite_axioms_mp({B("p")}), {B("p"), B("[]p")}).empty());
    Theory broken = custom_theory(Lang::Box, [](const Formula& a) { return a == B("p"); }, "only p");
    CHECK_FALSE(classicality_violation(*broken, {B("p")}).empty());
}
}
