#include "provmod/glp.hpp"

#include <algorithm>

#include "json.hpp"

namespace provmod {

PolyModel::PolyModel(std::vector<std::string> worlds,
                     std::vector<std::vector<std::pair<std::string, std::string>>> rels, Valuation val,
                     std::vector<std::vector<Theory>> theories)
    : names_(std::move(worlds)), val_(std::move(val)), theories_(std::move(theories)) {
    if (rels.empty()) throw ModelError("a poly model needs at least relation 0");
    for (const auto& es : rels) rels_.emplace_back(names_, es);
    if (val_.size() != names_.size() || theories_.size() != names_.size())
        throw ModelError("valuation and theory map must cover every world");
    int top = max_index();
    for (std::size_t w = 0; w < size(); ++w) {
        int wi = static_cast<int>(w);
        for (int n = 1; n <= top; ++n)
            if (rels_[n].accessible(wi) && !accessible(wi))
                throw ModelError("world " + names_[w] + " is reached by relation " + std::to_string(n) +
                                 " but not by relation 0");
        if (!accessible(wi)) {
            for (const auto& t : theories_[w])
                if (t) throw ModelError("theory attached to non-accessible world " + names_[w]);
            continue;
        }
        if (static_cast<int>(theories_[w].size()) != top + 1)
            throw ModelError("world " + names_[w] + " needs a theory for every index");
        for (const auto& t : theories_[w]) {
            if (!t) throw ModelError("missing theory at " + names_[w]);
            if (t->lang() != Lang::Omega) throw ModelError("poly theories must be over L_omega");
        }
    }
}

const Theory& PolyModel::theory(int w, int n) const {
    if (n < 0 || n > max_index()) throw ModelError("index out of range: " + std::to_string(n));
    if (!accessible(w)) throw ModelError("no theory at world " + names_.at(w));
    return theories_.at(w).at(n);
}

namespace {

void check_indices(const Formula& a, int top) {
    if (a.kind() == Kind::BoxN && a.index() > top)
        throw ModelError("index out of range: [" + std::to_string(a.index()) + "]");
    if (a.kind() == Kind::Imp) {
        check_indices(a.left(), top);
        check_indices(a.right(), top);
    } else if (a.kind() == Kind::BoxN) {
        check_indices(a.sub(), top);
    }
}

bool eval(const PolyModel& p, int w, const Formula& a) {
    switch (a.kind()) {
    case Kind::Bot: return false;
    case Kind::Atom: return p.valuation()[w].count(a.name()) != 0;
    case Kind::Imp: return !eval(p, w, a.left()) || eval(p, w, a.right());
    case Kind::BoxN:
        for (int u : p.rel(a.index()).succ(w))
            if (!p.theory(u, a.index())->derives(a.sub())) return false;
        return true;
    default: throw ModelError("formula is not in L_omega");
    }
}

}  // namespace

bool glp_forces(const PolyModel& p, int w, const Formula& a) {
    if (a.lang() != Lang::Omega) throw std::invalid_argument("glp_forces expects an L_omega formula");
    check_indices(a, p.max_index());
    return eval(p, w, a);
}

bool glp_forces_plus_0(const PolyModel& p, int w, const Formula& a) {
    if (!glp_forces(p, w, a)) return false;
    for (int u : p.rel(0).succ_plus(w))
        if (!glp_forces(p, u, a)) return false;
    return true;
}

bool GlpReport::has(const std::string& clause) const {
    return std::any_of(violations.begin(), violations.end(), [&](const GlpViolation& v) { return v.clause == clause; });
}

GlpReport check_glp_model(const PolyModel& p, const std::vector<Formula>& family) {
    GlpReport r;
    int top = p.max_index();
    auto add = [&](const char* c, const std::string& w) { r.violations.push_back({c, w}); };
    for (int n = 0; n < top; ++n)
        for (auto [w, u] : p.rel(n + 1).edges())
            if (!p.rel(n).rel(w, u))
                add("ascending_edge", "(" + p.names()[w] + ", " + p.names()[u] + ") in relation " +
                                          std::to_string(n + 1) + " but not " + std::to_string(n));
    std::vector<Formula> fam;
    for (const auto& a : family) {
        if (a.lang() != Lang::Omega) throw std::invalid_argument("family must be over L_omega");
        check_indices(a, top);
        fam.push_back(a);
    }
    for (std::size_t w = 0; w < p.size(); ++w) {
        int wi = static_cast<int>(w);
        if (!p.accessible(wi)) continue;
        const std::string& wn = p.names()[w];
        for (int n = 0; n <= top; ++n) {
            const Theory& t = p.theory(wi, n);
            std::string at = wn + " level " + std::to_string(n) + ": ";
            std::string cv = classicality_violation(*t, fam);
            if (!cv.empty()) add("classicality", at + cv);
            for (const auto& a : fam) {
                bool d = t->derives(a);
                if (d && !t->derives(Formula::boxn(n, a))) add("nec", at + print(a));
                if (!d && t->derives(Formula::imp(Formula::boxn(n, a), a))) add("loeb", at + print(a));
                if (n < top && d && !p.theory(wi, n + 1)->derives(a))
                    add("ascending_theory", at + print(a) + " not derived at level " + std::to_string(n + 1));
            }
        }
        for (const auto& a : fam)
            if (is_purely_modal(a) && glp_forces_plus_0(p, wi, a) && !p.theory(wi, 0)->derives(a))
                add("modal_completeness", wn + ": " + print(a));
    }
    for (int n = 0; n < top; ++n)
        for (auto [u, w] : p.rel(n + 1).edges())
            for (const auto& a : fam) {
                Formula nb = Formula::neg(Formula::boxn(n, a));
                if (glp_forces(p, u, nb) && !p.theory(w, n + 1)->derives(nb))
                    add("pi_completeness", p.names()[u] + " -> " + p.names()[w] + ": " + print(nb));
            }
    return r;
}

std::vector<Formula> glp_instance_family(const std::vector<std::string>& atoms, int depth, int max_index) {
    std::vector<Formula> out{Formula::bot(Lang::Omega), Formula::top(Lang::Omega)};
    for (const auto& q : atoms) {
        out.push_back(Formula::atom(q, Lang::Omega));
        out.push_back(Formula::neg(Formula::atom(q, Lang::Omega)));
    }
    std::vector<Formula> layer = out;
    for (int d = 1; d <= depth; ++d) {
        std::vector<Formula> next;
        for (const auto& x : layer)
            if (x.modal_depth() == d - 1 && !x.is_top())
                for (int n = 0; n <= max_index; ++n) next.push_back(Formula::boxn(n, x));
        for (const auto& f : next)
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
        layer = next;
    }
    return out;
}

std::vector<Formula> glp_axiom_instances(const std::vector<Formula>& fs, int top) {
    std::vector<Formula> ax;
    auto I = [](const Formula& x, const Formula& y) { return Formula::imp(x, y); };
    auto B = [](int n, const Formula& x) { return Formula::boxn(n, x); };
    for (int n = 0; n <= top; ++n)
        for (const auto& a : fs) {
            for (const auto& b : fs) ax.push_back(I(B(n, I(a, b)), I(B(n, a), B(n, b))));
            ax.push_back(I(B(n, a), B(n, B(n, a))));
            ax.push_back(I(B(n, I(B(n, a), a)), B(n, a)));
            if (n < top) {
                ax.push_back(I(B(n, a), B(n + 1, a)));
                ax.push_back(I(Formula::neg(B(n, a)), B(n + 1, Formula::neg(B(n, a)))));
            }
        }
    std::vector<Formula> out = ax;
    for (const auto& x : ax) out.push_back(B(0, x));
    for (const auto& t : tautology_sample(Lang::Omega)) {
        out.push_back(t);
        out.push_back(B(0, t));
    }
    return out;
}

GlpSoundnessReport glp_soundness_suite(const PolyModel& p, const std::vector<std::string>& atoms, int depth) {
    GlpSoundnessReport r;
    auto inst = glp_axiom_instances(glp_instance_family(atoms, depth, p.max_index()), p.max_index());
    r.instances = inst.size();
    for (const auto& a : inst)
        for (std::size_t w = 0; w < p.size(); ++w)
            if (!glp_forces(p, static_cast<int>(w), a)) r.failures.push_back(p.names()[w] + ": " + print(a));
    return r;
}

bool poly_kripke_forces(const std::vector<Frame>& rels, const Valuation& val, int w, const Formula& a) {
    switch (a.kind()) {
    case Kind::Bot: return false;
    case Kind::Atom: return val[w].count(a.name()) != 0;
    case Kind::Imp: return !poly_kripke_forces(rels, val, w, a.left()) || poly_kripke_forces(rels, val, w, a.right());
    case Kind::BoxN:
        if (a.index() >= static_cast<int>(rels.size())) throw ModelError("index out of range");
        for (int u : rels[a.index()].succ(w))
            if (!poly_kripke_forces(rels, val, u, a.sub())) return false;
        return true;
    default: throw ModelError("formula is not in L_omega");
    }
}

Theory poly_cone_theory(std::shared_ptr<const std::vector<Frame>> rels, std::shared_ptr<const Valuation> val, int w,
                        int n) {
    nlohmann::json j;
    j["kind"] = "cone";
    j["world"] = (*rels)[0].name(w);
    j["index"] = n;
    std::vector<RuleTag> rules{{RuleTag::Mp}, {RuleTag::PolyNec, n}, {RuleTag::PolyLoeb, n}};
    return std::make_shared<TheoryOracle>(
        Lang::Omega, std::vector<Formula>{}, rules, Provenance::Custom,
        [rels, val, w, n](const Formula& a) {
            if (!poly_kripke_forces(*rels, *val, w, a)) return false;
            for (int u : (*rels)[n].succ_plus(w))
                if (!poly_kripke_forces(*rels, *val, u, a)) return false;
            return true;
        },
        j.dump());
}

}  // namespace provmod
