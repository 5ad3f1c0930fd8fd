#pragma once

#include <memory>
#include <string>
#include <vector>

#include "provmod/glp.hpp"
#include "provmod/theory.hpp"

namespace fixtures {

using namespace provmod;

inline std::vector<Formula> parse_all(const std::vector<std::string>& texts, Lang lang = Lang::Box) {
    std::vector<Formula> out;
    for (const auto& t : texts) out.push_back(parse(t, lang));
    return out;
}

// Twenty GL theorems, checked against both deciders in the tests.
inline std::vector<Formula> gl_corpus20() {
    return parse_all({"p -> p",
                      "[](p -> q) -> [](p) -> []q",
                      "[]p -> [][]p",
                      "[]([]p -> p) -> []p",
                      "[]top",
                      "[](p -> p)",
                      "[](p & q) -> []p",
                      "[]p & []q -> [](p & q)",
                      "[]([]bot -> bot) -> []bot",
                      "<>p -> <>top",
                      "[]bot -> [][]bot",
                      "<>p -> <>(p & []~p)",
                      "[](p <-> q) -> ([]p <-> []q)",
                      "[]p | ~[]p",
                      "[][]p -> [][][]p",
                      "[]([]p -> p) -> [][]p",
                      "<><>p -> <>p",
                      "[]~[]bot -> []bot",
                      "~[]bot -> ~[]~[]bot",
                      "[]([]([]p -> p) -> []p)"});
}

// Ten non-theorems of GL.
inline std::vector<Formula> gl_nontheorems10() {
    return parse_all({"[]p -> p", "p -> []p", "<>top", "~[]bot", "[][]bot -> []bot", "<>p -> []<>p",
                      "[]p -> [][]q", "[](p | q) -> []p | []q", "p", "[]<>top"});
}

// Forty formulas of modal depth at most 2 over p.
inline std::vector<Formula> family40() {
    return parse_all({"p",          "~p",           "bot",          "top",          "[]p",
                      "[]~p",       "<>p",          "<>~p",         "[]bot",        "<>top",
                      "p -> []p",   "[]p -> p",     "p & []p",      "p | <>p",      "[]p | []~p",
                      "<>p & <>~p", "[](p | []p)",  "[][]p",        "[]<>p",        "<>[]p",
                      "<><>p",      "[][]bot",      "<>[]bot",      "[]<>top",      "<><>top",
                      "[](p -> []p)", "[]([]p -> p)", "[]([]p -> p) -> []p", "[]p -> [][]p",
                      "<>(p & []~p)", "[](p & <>p)", "<>(~p & <>p)", "p -> [](p -> <>p)",
                      "[]p & <>~p",  "~[]bot -> <>[]bot", "[](~p | []bot)", "<>p -> []p",
                      "[]~[]p",      "p <-> []p",    "<>(p | []p) & []<>~p"});
}

// Thirty formulas of modal depth at most 2 over p for rule-closure checks.
inline std::vector<Formula> family30() {
    auto f = family40();
    f.resize(30);
    return f;
}

struct GlpFixture {
    std::string name;
    std::shared_ptr<PolyModel> model;
    std::string clause;    // expected violated clause, empty for compliant fixtures
    std::string axiom;     // axiom instance expected to fail at world "a"
};

inline Theory omega_axioms(const std::vector<std::string>& ax) {
    return finite_axioms_mp(parse_all(ax, Lang::Omega), Lang::Omega);
}

using Edges = std::vector<std::pair<std::string, std::string>>;

// Attaches the truth-cone oracle at every relation-0 accessible world and level.
inline std::shared_ptr<PolyModel> cone_model(const std::vector<std::string>& ws, const std::vector<Edges>& rels,
                                             const Valuation& val) {
    auto frames = std::make_shared<std::vector<Frame>>();
    for (const auto& es : rels) frames->emplace_back(ws, es);
    auto sval = std::make_shared<const Valuation>(val);
    std::vector<std::vector<Theory>> th(ws.size());
    for (std::size_t w = 0; w < ws.size(); ++w) {
        if (!(*frames)[0].accessible(static_cast<int>(w))) continue;
        for (std::size_t n = 0; n < rels.size(); ++n)
            th[w].push_back(poly_cone_theory(frames, sval, static_cast<int>(w), static_cast<int>(n)));
    }
    return std::make_shared<PolyModel>(ws, rels, val, th);
}

inline std::vector<GlpFixture> glp_compliant() {
    std::vector<GlpFixture> out;
    out.push_back({"single world", cone_model({"a"}, {{}, {}, {}}, {{}}), "", ""});
    out.push_back({"two-chain at level 0", cone_model({"a", "b"}, {{{"a", "b"}}, {}, {}}, {{}, {"p"}}), "", ""});
    out.push_back({"transitive three-chain at level 0",
                   cone_model({"a", "b", "c"}, {{{"a", "b"}, {"a", "c"}, {"b", "c"}}, {}, {}}, {{"p"}, {}, {"p"}}),
                   "", ""});
    {
        std::vector<std::string> ws{"a", "b"};
        std::vector<Edges> rels{{{"a", "b"}}, {{"a", "b"}}, {}};
        Valuation val{{}, {"p"}};
        auto frames = std::make_shared<std::vector<Frame>>();
        for (const auto& es : rels) frames->emplace_back(ws, es);
        auto sval = std::make_shared<const Valuation>(val);
        std::vector<std::vector<Theory>> th(2);
        th[1] = {poly_cone_theory(frames, sval, 1, 0), omega_axioms({"bot"}), omega_axioms({"bot"})};
        out.push_back({"levels 0 and 1 with inconsistent upper theories", std::make_shared<PolyModel>(ws, rels, val, th),
                       "", ""});
    }
    return out;
}

inline std::vector<GlpFixture> glp_violating() {
    std::vector<GlpFixture> out;
    {
        std::vector<std::string> ws{"a", "b", "c"};
        std::vector<Edges> rels{{{"a", "c"}, {"c", "b"}}, {{"a", "b"}}, {}};
        std::vector<std::vector<Theory>> th(3);
        th[1] = {omega_axioms({}), omega_axioms({}), omega_axioms({})};
        th[2] = {omega_axioms({"p"}), omega_axioms({"p"}), omega_axioms({"p"})};
        out.push_back({"level-1 edge outside level 0", std::make_shared<PolyModel>(ws, rels, Valuation(3), th),
                       "ascending_edge", "[0]p -> [1]p"});
    }
    out.push_back({"leaf theories without upward Pi-facts",
                   cone_model({"a", "b"}, {{{"a", "b"}}, {{"a", "b"}}, {}}, {{}, {}}), "pi_completeness",
                   "~[0]bot -> [1]~[0]bot"});
    {
        std::vector<std::string> ws{"a", "b"};
        std::vector<Edges> rels{{{"a", "b"}}, {}, {}};
        std::vector<std::vector<Theory>> th(2);
        th[1] = {omega_axioms({"p"}), omega_axioms({"p"}), omega_axioms({"p"})};
        out.push_back({"theory not closed under necessitation", std::make_shared<PolyModel>(ws, rels, Valuation(2), th),
                       "nec", "[0]p -> [0][0]p"});
    }
    return out;
}

}  // namespace fixtures
