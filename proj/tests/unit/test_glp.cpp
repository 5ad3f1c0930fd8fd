#include "doctest.h"
#include "fixtures.hpp"
#include "provmod/glp.hpp"

using namespace provmod;

namespace {
Formula O(const char* s) { return parse(s, Lang::Omega); }
}

TEST_SUITE("glp") {
TEST_CASE("indexed box forcing") {
    std::vector<std::vector<Theory>> th(2);
    th[1] = {fixtures::omega_axioms({"p"}), fixtures::omega_axioms({"p"})};
    PolyModel m({"w", "u"}, {{{"w", "u"}}, {}}, Valuation(2), th);
    CHECK(glp_forces(m, 1, O("[0]bot")));
    CHECK(glp_forces(m, 0, O("[0]p")));
    CHECK(glp_forces(m, 0, O("[1]q")));
    CHECK_FALSE(glp_forces(m, 0, O("[0]q")));
    CHECK(glp_forces(m, 0, O("[0](q | ~q)")));
    CHECK_THROWS_AS(glp_forces(m, 0, O("[2]p")), ModelError);
}

TEST_CASE("construction checks") {
    CHECK_THROWS_AS(PolyModel({"w", "u"}, {{}, {{"w", "u"}}}, Valuation(2), {{}, {}}), ModelError);
    CHECK_THROWS_AS(PolyModel({"w", "u"}, {{{"w", "u"}}}, Valuation(2), {{}, {}}), ModelError);
}

TEST_CASE("compliant fixtures pass") {
    auto fam = glp_instance_family({"p"}, 1, 2);
    for (const auto& fx : fixtures::glp_compliant()) {
        CAPTURE(fx.name);
        CHECK(check_glp_model(*fx.model, fam).ok());
        GlpSoundnessReport r = glp_soundness_suite(*fx.model, {"p"}, 1);
        CHECK(r.instances > 0);
        CHECK(r.failures.empty());
    }
}

TEST_CASE("small family from the two-level example") {
    std::vector<Formula> fam{O("top"), O("bot"), O("p"), O("[0]p")};
    auto fx = fixtures::glp_compliant()[3];
    CHECK(check_glp_model(*fx.model, fam).ok());
}

TEST_CASE("violating fixtures report the clause and a failing axiom") {
    auto fam = glp_instance_family({"p"}, 1, 2);
    for (const auto& fx : fixtures::glp_violating()) {
        CAPTURE(fx.name);
        GlpReport r = check_glp_model(*fx.model, fam);
        CHECK(r.has(fx.clause));
        auto fails = glp_soundness_suite(*fx.model, {"p"}, 1).failures;
        std::string want = "a: " + print(O(fx.axiom.c_str()));
        CHECK(std::find(fails.begin(), fails.end(), want) != fails.end());
    }
}

TEST_CASE("ascending edge witness names the edge") {
    auto fx = fixtures::glp_violating()[0];
    GlpReport r = check_glp_model(*fx.model, {O("p")});
    bool seen = false;
    for (const auto& v : r.violations)
        if (v.clause == "ascending_edge") {
            CHECK(v.witness.find("(a, b)") != std::string::npos);
            seen = true;
        }
    CHECK(seen);
}

TEST_CASE("empty relations force every axiom") {
    std::vector<std::vector<Theory>> th(1);
    PolyModel m({"w"}, {{}, {}, {}}, Valuation(1), th);
    CHECK(glp_soundness_suite(m, {"p"}, 1).failures.empty());
}

TEST_CASE("instance family") {
    auto fam = glp_instance_family({"p"}, 1, 2);
    // bot, top, p, ~p, then [n] of bot, p, ~p for n = 0..2
    CHECK(fam.size() == 4 + 9);
}
}
