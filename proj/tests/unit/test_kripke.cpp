#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "provmod/decide.hpp"
#include "provmod/kripke.hpp"

using namespace provmod;

namespace {
Formula B(const char* s) { return parse(s, Lang::Box); }
Formula R(const char* s) { return parse(s, Lang::Rhd); }

KripkeModel chain2(bool p_at_w1 = true) {
    return KripkeModel::make({"w0", "w1"}, {{"w0", "w1"}}, p_at_w1 ? std::map<std::string, std::set<std::string>>{{"w1", {"p"}}}
                                                                   : std::map<std::string, std::set<std::string>>{});
}
}  // namespace

TEST_SUITE("kripke") {
TEST_CASE("forcing examples") {
    KripkeModel one = KripkeModel::make({"w"}, {}, {});
    CHECK(forces(one, "w", B("[]bot")));
    KripkeModel k = chain2();
    CHECK(forces(k, "w0", B("[]p")));
    CHECK(forces(k, "w1", B("p")));
    CHECK_FALSE(forces(k, "w0", B("p")));
    for (int w = 0; w < 2; ++w) CHECK_FALSE(forces(k, w, B("bot")));
    CHECK_THROWS(forces(k, "nowhere", B("p")));
}

TEST_CASE("plus-forcing examples") {
    KripkeModel k = chain2();
    CHECK_FALSE(forces_plus(k, "w0", B("top")));
    CHECK(forces_plus(k, "w1", B("p")));
    CHECK(forces_plus(k, "w1", B("[]bot")));
}

TEST_CASE("frame properties") {
    KripkeModel loop = KripkeModel::make({"w"}, {{"w", "w"}}, {});
    FrameReport r = check_frame(loop.frame);
    CHECK_FALSE(r.converse_well_founded.holds);
    CHECK(r.converse_well_founded.witness == (std::vector<std::string>{"w", "w"}));
    CHECK(r.reflexive.holds);

    FrameReport c = check_frame(chain2().frame);
    CHECK(c.tree.holds);
    CHECK(c.transitive.holds);
    CHECK(c.irreflexive.holds);
    CHECK_FALSE(c.reflexive.holds);
    CHECK_FALSE(c.reflexive.witness.empty());

    Frame d({"w", "u", "v", "z"}, {{"w", "u"}, {"w", "v"}, {"u", "z"}, {"v", "z"}});
    FrameReport dr = check_frame(d);
    CHECK_FALSE(dr.tree.holds);
    CHECK(dr.tree.witness == std::vector<std::string>{"u", "v", "z"});
    CHECK_FALSE(dr.transitive.holds);
}

TEST_CASE("order utilities") {
    Frame c({"w0", "w1", "w2"}, {{"w0", "w1"}, {"w1", "w2"}});
    CHECK(c.pred(2) == 1);
    CHECK(c.hat_less(1, 2));
    CHECK_THROWS_AS(c.pred(0), ModelError);

    Frame s({"w", "u", "v"}, {{"w", "u"}, {"w", "v"}});
    CHECK(s.sim(1, 2));
    CHECK_FALSE(s.hat_less(1, 2));
}

TEST_CASE("hat order is acyclic on trees") {
    for (const Frame& f : plain_trees(5)) {
        std::size_t n = f.size();
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) reach[a][b] = f.hat_less(int(a), int(b));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (reach[a][k] && reach[k][b]) reach[a][b] = true;
        for (std::size_t a = 0; a < n; ++a) CHECK_FALSE(reach[a][a]);
    }
}

TEST_CASE("forcing agrees with the oracle on random trees") {
    std::mt19937 rng(21);
    for (int n = 1; n <= 4; ++n)
        for (const auto& par : oracle::parent_arrays(n))
            for (bool tr : {false, true}) {
                oracle::Model m = oracle::tree_model(par, tr);
                m.val["p"] = rng() & ((1u << n) - 1);
                std::vector<std::string> ws;
                std::vector<std::pair<std::string, std::string>> es;
                std::map<std::string, std::set<std::string>> val;
                for (int a = 0; a < n; ++a) {
                    ws.push_back("w" + std::to_string(a));
                    if (m.val["p"] >> a & 1) val[ws.back()].insert("p");
                }
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (m.succ[a] >> b & 1) es.emplace_back(ws[a], ws[b]);
                KripkeModel k = KripkeModel::make(ws, es, val);
                for (int i = 0; i < 20; ++i) {
                    Formula f = oracle::random_formula(rng, {"p"}, 3, Lang::Box);
                    for (int w = 0; w < n; ++w) CHECK(forces(k, w, f) == oracle::holds(m, w, f));
                }
            }
}

TEST_CASE("Veltman forcing examples") {
    VeltmanModel leaf = VeltmanModel::make({"w"}, {}, {}, {});
    CHECK(veltman_forces(leaf, 0, R("p |> bot")));
    VeltmanModel v = VeltmanModel::make({"w", "u"}, {{"w", "u"}}, {}, {{"u", {"p"}}});
    CHECK(veltman_forces(v, 0, R("p |> p")));
    CHECK_FALSE(veltman_forces(v, 0, R("p |> bot")));
    CHECK(veltman_forces(v, 0, R("[]p")) == forces(v.base, 0, B("[]p")));
}

TEST_CASE("invalid Veltman preorders are rejected") {
    CHECK_THROWS_AS(VeltmanModel::make({"w", "u", "v"}, {{"w", "u"}, {"w", "v"}}, {{"w", {{"u", "w"}}}}, {}), ModelError);
    CHECK_THROWS_AS(VeltmanModel::make({"w", "u", "v"}, {{"w", "u"}, {"u", "v"}}, {}, {}), ModelError);
}

TEST_CASE("unravelling examples") {
    VeltmanModel c = VeltmanModel::make({"w0", "w1"}, {{"w0", "w1"}}, {}, {});
    Unravelled u = unravel(c);
    CHECK(u.size() == 3);
    std::set<std::string> names(u.names.begin(), u.names.end());
    CHECK(names == std::set<std::string>{"w0", "w1", "w0.w1"});
    for (std::size_t s = 0; s < u.size(); ++s)
        if (u.names[s] == "w0.w1") CHECK(u.names[u.parent[s]] == "w0");

    Unravelled one = unravel(VeltmanModel::make({"w"}, {}, {}, {}));
    CHECK(one.size() == 1);
    CHECK(one.children[0].empty());
}

TEST_CASE("unravelling preserves truth and the two clauses agree") {
    std::mt19937 rng(22);
    std::vector<Formula> fam;
    for (int i = 0; i < 40; ++i) fam.push_back(oracle::random_formula(rng, {"p", "q"}, 2, Lang::Rhd));
    for (int n = 1; n <= 3; ++n)
        for (const VeltmanModel& fr : veltman_frames(n)) {
            CHECK_FALSE(fr.violation().has_value());
            for (const Valuation& val : all_valuations(n, {"p", "q"})) {
                VeltmanModel vm(KripkeModel(fr.frame(), val), fr.le);
                auto ts = veltman_truth_sets(vm, fam);
                auto sym = veltman_truth_sets(vm, fam, true);
                Unravelled un = unravel(vm);
                auto us = unravelled_truth_sets(un, fam);
                for (std::size_t i = 0; i < fam.size(); ++i) {
                    CHECK(ts[i] == sym[i]);
                    for (std::size_t s = 0; s < un.size(); ++s) CHECK(us[i][s] == ts[i][un.last(s)]);
                }
            }
        }
}

TEST_CASE("Veltman frames up to isomorphism") {
    CHECK(veltman_frames(1).size() == 1);
    CHECK(veltman_frames(2).size() == 2);
}
}
