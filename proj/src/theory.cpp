#include "provmod/theory.hpp"

#include "json.hpp"

#include "provmod/decide.hpp"

namespace provmod {

std::string RuleTag::str() const {
    switch (kind) {
    case Mp: return "mp";
    case Nec: return "nec";
    case Loeb: return "loeb";
    case PolyNec: return "poly_nec(" + std::to_string(n) + ")";
    case PolyLoeb: return "poly_loeb(" + std::to_string(n) + ")";
    }
    return "?";
}

const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::FiniteAxiomsMp: return "finite_axioms_mp";
    case Provenance::KripkeWorld: return "kripke_world";
    case Provenance::GlTheorems: return "gl_theorems";
    case Provenance::GlN: return "gl_n";
    case Provenance::Generated: return "generated";
    case Provenance::Custom: return "custom";
    }
    return "?";
}

TheoryOracle::TheoryOracle(Lang lang, std::vector<Formula> axioms, std::vector<RuleTag> rules, Provenance prov,
                           Decider d, std::string descriptor)
    : lang_(lang), axioms_(std::move(axioms)), rules_(std::move(rules)), prov_(prov), decide_(std::move(d)),
      descriptor_(std::move(descriptor)) {
    for (const auto& r : rules_)
        if ((r.kind == RuleTag::PolyNec || r.kind == RuleTag::PolyLoeb) && lang_ != Lang::Omega)
            throw std::invalid_argument("indexed rule tags need L_omega");
}

bool TheoryOracle::has_rule(RuleTag::Kind k) const {
    for (const auto& r : rules_)
        if (r.kind == k) return true;
    return false;
}

bool TheoryOracle::derives(const Formula& a) const {
    if (a.lang() != lang_) throw std::invalid_argument("formula language does not match the theory");
    std::string key = print(a);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    bool r = decide_(a);
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(key, r);
    return r;
}

Theory finite_axioms_mp(const std::vector<Formula>& axioms, Lang lang) {
    nlohmann::json j;
    j["kind"] = "finite_axioms_mp";
    j["axioms"] = nlohmann::json::array();
    for (const auto& a : axioms) {
        if (a.lang() != lang) throw std::invalid_argument("axiom language does not match the theory");
        j["axioms"].push_back(print(a));
    }
    auto ax = axioms;
    return std::make_shared<TheoryOracle>(
        lang, axioms, std::vector<RuleTag>{{RuleTag::Mp}}, Provenance::FiniteAxiomsMp,
        [ax](const Formula& a) { return classical_entails(ax, a); }, j.dump());
}

Theory kripke_world_theory(std::shared_ptr<const KripkeModel> k, int w, bool transitive) {
    if (w < 0 || w >= static_cast<int>(k->size())) throw ModelError("unknown world index");
    if (transitive && !check_frame(k->frame).transitive.holds)
        throw ModelError("transitive world theory requested on a non-transitive frame");
    nlohmann::json j;
    j["kind"] = "kripke_world";
    j["world"] = k->frame.name(w);
    j["transitive"] = transitive;
    std::vector<RuleTag> rules{{RuleTag::Mp}};
    if (transitive) rules.push_back({RuleTag::Nec});
    return std::make_shared<TheoryOracle>(
        Lang::Box, std::vector<Formula>{}, rules, Provenance::KripkeWorld,
        [k, w, transitive](const Formula& a) { return forces(*k, w, transitive ? Formula::boxdot(a) : a); },
        j.dump());
}

Theory gl_theorems() {
    static Theory t = std::make_shared<TheoryOracle>(
        Lang::Box, std::vector<Formula>{}, std::vector<RuleTag>{{RuleTag::Mp}, {RuleTag::Nec}, {RuleTag::Loeb}},
        Provenance::GlTheorems, [](const Formula& a) { return decide_gl(a).status == Status::Theorem; },
        R"({"kind":"gl_theorems"})");
    return t;
}

Theory gl_n(int n) {
    if (n < 0) throw std::invalid_argument("gl_n needs n >= 0");
    Formula ax = Formula::box_power(n, Formula::bot());
    nlohmann::json j;
    j["kind"] = "gl_n";
    j["n"] = n;
    return std::make_shared<TheoryOracle>(
        Lang::Box, std::vector<Formula>{ax}, std::vector<RuleTag>{{RuleTag::Mp}, {RuleTag::Nec}, {RuleTag::Loeb}},
        Provenance::GlN, [ax](const Formula& a) { return decide_gl(Formula::imp(ax, a)).status == Status::Theorem; },
        j.dump());
}

Theory custom_theory(Lang lang, TheoryOracle::Decider d, const std::string& label) {
    nlohmann::json j;
    j["kind"] = "custom";
    j["label"] = label;
    return std::make_shared<TheoryOracle>(lang, std::vector<Formula>{}, std::vector<RuleTag>{{RuleTag::Mp}},
                                          Provenance::Custom, std::move(d), j.dump());
}

std::vector<Formula> tautology_sample(Lang lang) {
    static const char* texts[] = {"top",         "p -> p",           "p | ~p",         "~(p & ~p)",
                                  "(p -> q) -> (~q -> ~p)", "p -> (q -> p)", "((p -> q) -> p) -> p",
                                  "bot -> q",    "(p & q) -> (q & p)"};
    std::vector<Formula> out;
    for (const char* t : texts) out.push_back(parse(t, lang));
    Formula m = lang == Lang::Omega ? Formula::boxn(0, Formula::atom("p", lang)) : Formula::lbox(Formula::atom("p", lang));
    out.push_back(Formula::imp(m, m));
    out.push_back(Formula::disj(m, Formula::neg(m)));
    return out;
}

std::string classicality_violation(const TheoryOracle& t, const std::vector<Formula>& family) {
    for (const auto& taut : tautology_sample(t.lang()))
        if (!t.derives(taut)) return "tautology not derived: " + print(taut);
    std::vector<bool> d(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) d[i] = t.derives(family[i]);
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!d[i]) continue;
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (d[j]) continue;
            if (t.derives(Formula::imp(family[i], family[j])))
                return "modus ponens fails for " + print(family[i]) + " and " + print(family[j]);
        }
    }
    return "";
}

}  // namespace provmod
