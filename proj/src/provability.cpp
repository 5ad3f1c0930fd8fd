#include "provmod/provability.hpp"

#include <algorithm>
#include <functional>

namespace provmod {

ProvabilityModel::ProvabilityModel(Frame frame, Valuation val, std::vector<Theory> theories, Lang lang)
    : frame_(std::move(frame)), val_(std::move(val)), theories_(std::move(theories)), lang_(lang) {
    if (val_.size() != frame_.size() || theories_.size() != frame_.size())
        throw ModelError("valuation and theory map must cover every world");
    if (lang_ == Lang::Omega) throw ModelError("use a poly model for L_omega");
    for (std::size_t w = 0; w < size(); ++w) {
        bool acc = frame_.accessible(static_cast<int>(w));
        if (acc && !theories_[w]) throw ModelError("missing theory at accessible world " + frame_.name(w));
        if (!acc && theories_[w]) throw ModelError("theory attached to non-accessible world " + frame_.name(w));
        if (theories_[w] && theories_[w]->lang() != lang_) throw ModelError("theory language mismatch");
    }
    FrameReport r = check_frame(frame_);
    tree_ = r.tree.holds && r.converse_well_founded.holds;
    tree_pred_.assign(size(), -1);
    if (tree_)
        for (std::size_t w = 0; w < size(); ++w)
            for (int u : frame_.pred_list(w))
                if (frame_.immediate_pred(u, static_cast<int>(w))) tree_pred_[w] = u;
    e_family_ = {Formula::bot(lang_), Formula::top(lang_)};
}

const Theory& ProvabilityModel::theory(int w) const {
    const Theory& t = theories_.at(w);
    if (!t) throw ModelError("no theory at world " + frame_.name(w));
    return t;
}

void ProvabilityModel::set_e_family(std::vector<Formula> fam, bool family_bounded) {
    if (fam.empty()) throw std::invalid_argument("the |> family must be nonempty");
    for (const auto& e : fam)
        if (e.lang() != lang_) throw std::invalid_argument("family language mismatch");
    e_family_ = std::move(fam);
    family_bounded_ = family_bounded;
    std::lock_guard<std::mutex> lock(mu_);
    memo_.clear();
}

bool ProvabilityModel::forces(int w, const Formula& a) const {
    switch (a.kind()) {
    case Kind::Bot: return false;
    case Kind::Atom: return val_.at(w).count(a.name()) != 0;
    case Kind::Imp: return !forces(w, a.left()) || forces(w, a.right());
    default: break;
    }
    std::uint64_t key = (static_cast<std::uint64_t>(a.id()) << 16) | static_cast<std::uint64_t>(w);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    bool r = true;
    if (a.kind() == Kind::Box) {
        if (lang_ != Lang::Box) throw ModelError("[] in a non-L_box model");
        for (int u : frame_.succ(w))
            if (!theory(u)->derives(a.sub())) {
                r = false;
                break;
            }
    } else if (a.kind() == Kind::Rhd) {
        r = pm_forces_rhd(*this, w, a, e_family_);
    } else {
        throw ModelError("indexed boxes need a poly model");
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(key, r);
    return r;
}

bool ProvabilityModel::forces_plus(int w, const Formula& a) const {
    auto all_below = [&](int u) {
        for (int v : frame_.succ_plus(u))
            if (!forces(v, a)) return false;
        return true;
    };
    if (tree_) {
        int u = tree_pred_[w];
        return u >= 0 && all_below(u);
    }
    for (int u : frame_.pred_list(w))
        if (all_below(u)) return true;
    return false;
}

PModel make_pre_model(const Frame& f, const Valuation& v, std::vector<Theory> theories, Lang lang) {
    return std::make_shared<ProvabilityModel>(f, v, std::move(theories), lang);
}

bool pm_forces(const ProvabilityModel& p, int w, const Formula& a) { return p.forces(w, a); }
bool pm_forces_plus(const ProvabilityModel& p, int w, const Formula& a) { return p.forces_plus(w, a); }

bool pm_forces_rhd(const ProvabilityModel& p, int w, const Formula& a, const std::vector<Formula>& fam) {
    if (a.kind() != Kind::Rhd) throw std::invalid_argument("pm_forces_rhd expects A |> B");
    if (fam.empty()) throw std::invalid_argument("the |> family must be nonempty");
    Formula lhs = a.left(), rhs = a.right();
    for (int u : p.frame().succ(w)) {
        const Theory& t = p.theory(u);
        for (const auto& e : fam) {
            Formula de = Formula::ldia(e);
            if (t->derives(Formula::imp(rhs, de)) && !t->derives(Formula::imp(lhs, de))) return false;
        }
    }
    return true;
}

PModel lift_kripke(const KripkeModel& k, bool transitive) {
    auto km = std::make_shared<const KripkeModel>(k);
    std::vector<Theory> th(k.size());
    for (std::size_t w = 0; w < k.size(); ++w)
        if (k.frame.accessible(static_cast<int>(w))) th[w] = kripke_world_theory(km, static_cast<int>(w), transitive);
    auto p = make_pre_model(k.frame, k.val, std::move(th), Lang::Box);
    p->certificate = "lifted";
    return p;
}

ProjectionReport project_and_check(const ProvabilityModel& p, const std::vector<Formula>& family) {
    if (!check_frame(p.frame()).transitive.holds) throw ModelError("projection needs a transitive model");
    for (std::size_t w = 0; w < p.size(); ++w) {
        int wi = static_cast<int>(w);
        if (!p.has_theory(wi)) continue;
        for (const auto& a : family) {
            bool d = p.theory(wi)->derives(a);
            if (d && !p.forces(wi, a))
                throw ModelError("local soundness fails at " + p.frame().name(wi) + " for " + print(a));
            if (p.forces_plus(wi, a) && !d)
                throw ModelError("local completeness fails at " + p.frame().name(wi) + " for " + print(a));
        }
    }
    ProjectionReport r{p.kripke(), true, ""};
    for (std::size_t w = 0; w < p.size() && r.equivalent; ++w)
        for (const auto& a : family)
            if (p.forces(static_cast<int>(w), a) != provmod::forces(r.kripke, static_cast<int>(w), a)) {
                r.equivalent = false;
                r.witness = p.frame().name(w) + ": " + print(a);
                break;
            }
    return r;
}

// ---------------------------------------------------------------- generation

namespace {

PModel generate(const ProvabilityModel& seed, Lang lang) {
    FrameReport fr = check_frame(seed.frame());
    if (!fr.converse_well_founded.holds || !fr.tree.holds)
        throw ModelError("generation needs a converse well-founded tree");
    std::size_t n = seed.size();
    std::vector<Formula> phi(n);
    for (std::size_t w = 0; w < n; ++w) {
        if (!seed.has_theory(static_cast<int>(w))) continue;
        const Theory& t = seed.theory(static_cast<int>(w));
        if (t->provenance() != Provenance::FiniteAxiomsMp) throw ModelError("seed theories must be finite axiom sets");
        for (const auto& r : t->rules())
            if (r.kind != RuleTag::Mp) throw ModelError("seed theories must not carry rules beyond mp");
        phi[w] = Formula::boxdot(Formula::conj_all(t->axioms(), lang));
    }
    auto slot = std::make_shared<std::weak_ptr<ProvabilityModel>>();
    std::vector<Theory> th(n);
    for (std::size_t w = 0; w < n; ++w) {
        if (!seed.has_theory(static_cast<int>(w))) continue;
        Formula ph = phi[w];
        int wi = static_cast<int>(w);
        std::vector<RuleTag> rules{{RuleTag::Mp}, {RuleTag::Nec}};
        th[w] = std::make_shared<TheoryOracle>(
            lang, seed.theory(wi)->axioms(), rules, Provenance::Generated,
            [slot, ph, wi](const Formula& a) {
                auto m = slot->lock();
                if (!m) throw ModelError("generated theory outlived its model");
                if (classically_valid(a)) return true;
                return m->forces_plus(wi, pre_interpolant(Formula::imp(ph, a)));
            },
            seed.theory(wi)->descriptor());
    }
    auto model = std::make_shared<ProvabilityModel>(seed.frame(), seed.valuation(), th, lang);
    *slot = model;
    model->certificate = "generated";
    return model;
}

}  // namespace

PModel generate_gl(const ProvabilityModel& seed) {
    if (seed.lang() != Lang::Box) throw ModelError("generate_gl needs an L_box seed");
    return generate(seed, Lang::Box);
}

std::vector<Formula> boolean_family(const std::vector<std::string>& atoms, Lang lang) {
    std::vector<std::string> as = atoms;
    std::sort(as.begin(), as.end());
    if (as.size() > 2) throw EnvelopeError("boolean family over more than 2 atoms is too large");
    std::vector<Formula> minterms;
    for (std::size_t m = 0; m < (std::size_t(1) << as.size()); ++m) {
        std::vector<Formula> lits;
        for (std::size_t j = 0; j < as.size(); ++j) {
            Formula ap = Formula::atom(as[j], lang);
            lits.push_back(m >> j & 1 ? ap : Formula::neg(ap));
        }
        minterms.push_back(Formula::conj_all(lits, lang));
    }
    std::vector<Formula> out;
    for (std::size_t s = 0; s < (std::size_t(1) << minterms.size()); ++s) {
        std::vector<Formula> ds;
        for (std::size_t i = 0; i < minterms.size(); ++i)
            if (s >> i & 1) ds.push_back(minterms[i]);
        out.push_back(Formula::disj_all(ds, lang));
    }
    return out;
}

PModel generate_ilm(const ProvabilityModel& seed, const std::vector<Formula>& caller_family) {
    if (seed.lang() != Lang::Rhd) throw ModelError("generate_ilm needs an L_rhd seed");
    std::vector<std::string> atoms;
    std::vector<Formula> axs;
    for (std::size_t w = 0; w < seed.size(); ++w)
        if (seed.has_theory(static_cast<int>(w)))
            for (const auto& a : seed.theory(static_cast<int>(w))->axioms()) axs.push_back(a);
    for (const auto& p : atoms_of(axs)) atoms.push_back(p);
    std::vector<Formula> fam;
    bool bounded = true;
    try {
        fam = representatives_ilm(static_cast<int>(seed.size()), atoms).members;
        bounded = false;
    } catch (const EnvelopeError&) {
        if (caller_family.empty())
            throw EnvelopeError("outside the representative envelope: a |> family must be supplied");
        fam = caller_family;
    }
    PModel m = generate(seed, Lang::Rhd);
    m->set_e_family(fam, bounded);
    return m;
}

// ---------------------------------------------------------------- pipelines

PipelineResult countermodel_pipeline_gl(const Formula& a) {
    if (decide_gl(a).status == Status::Theorem) throw std::invalid_argument("formula is a GL theorem");
    PipelineResult res;
    int n = 1;
    DecisionVerdict v;
    for (;; ++n) {
        v = decide_gl(Formula::imp(Formula::box_power(n, Formula::bot()), a));
        if (v.status == Status::NonTheorem) break;
        if (n > 64) throw std::logic_error("no finite height refutes the formula");
    }
    res.n = n;
    KripkeModel k = *v.countermodel;
    std::vector<std::string> atoms;
    for (const auto& p : atoms_of(a)) atoms.push_back(p);
    RepresentativeSet xs = representatives_gl(n, atoms);
    std::vector<Theory> th(k.size());
    for (std::size_t w = 0; w < k.size(); ++w) {
        if (!k.frame.accessible(static_cast<int>(w))) continue;
        std::vector<Formula> ax;
        for (const auto& b : xs.members)
            if (forces(k, static_cast<int>(w), Formula::boxdot(b))) ax.push_back(b);
        th[w] = finite_axioms_mp(ax);
    }
    auto seed = make_pre_model(k.frame, k.val, th, Lang::Box);
    res.model = generate_gl(*seed);
    res.world = v.world;
    res.kripke = k;
    if (pm_forces(*res.model, res.world, a)) throw std::logic_error("generated model does not refute the formula");
    res.soundness_failures = soundness_suite(*res.model, SuiteLogic::GL, instance_family(atoms, 1, Lang::Box));
    return res;
}

PipelineResult countermodel_pipeline_ilm(const Formula& a, int bound, const std::vector<Formula>& family) {
    DecisionVerdict v = decide_ilm(a, bound);
    if (v.status != Status::NonTheorem) throw std::invalid_argument("no Veltman countermodel within the bound");
    PipelineResult res;
    const VeltmanModel& vm = *v.veltman_countermodel;
    Unravelled un = unravel(vm);
    int n = 1;
    while (true) {
        bool all = true;
        auto t = veltman_truth_set(vm, Formula::box_power(n, Formula::bot(Lang::Rhd)));
        for (bool b : t) all = all && b;
        if (all) break;
        ++n;
    }
    res.n = n;
    std::vector<std::string> atoms;
    for (const auto& p : atoms_of(a)) atoms.push_back(p);
    std::vector<Formula> xs;
    try {
        xs = representatives_ilm(n, atoms).members;
    } catch (const EnvelopeError&) {
        xs = family.empty() ? boolean_family(atoms, Lang::Rhd) : family;
    }
    KripkeModel uk = un.as_kripke();
    std::vector<Theory> th(un.size());
    std::vector<std::vector<bool>> truth;
    for (const auto& b : xs) truth.push_back(unravelled_truth_set(un, b));
    for (std::size_t s = 0; s < un.size(); ++s) {
        if (un.parent[s] < 0) continue;
        std::vector<Formula> ax;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            bool all = true;
            for (std::size_t t = 0; t < un.size(); ++t)
                if (un.le[s][t] && !truth[i][t]) all = false;
            if (all) ax.push_back(xs[i]);
        }
        th[s] = finite_axioms_mp(ax, Lang::Rhd);
    }
    auto seed = make_pre_model(uk.frame, uk.val, th, Lang::Rhd);
    std::vector<Formula> fam = family.empty() ? xs : family;
    res.model = generate_ilm(*seed, fam);
    for (std::size_t s = 0; s < un.size(); ++s)
        if (un.seqs[s].size() == 1 && un.seqs[s][0] == v.world) res.world = static_cast<int>(s);
    res.veltman = vm;
    res.unravelled = un;
    if (pm_forces(*res.model, res.world, a)) throw std::logic_error("generated model does not refute the formula");
    res.soundness_failures = soundness_suite(*res.model, SuiteLogic::ILM, instance_family(atoms, 0, Lang::Rhd));
    return res;
}

IsoResult is_l_isomorphic(const ProvabilityModel& a, const ProvabilityModel& b, const std::vector<Formula>& family) {
    if (a.size() != b.size()) throw ModelError("l-isomorphism needs the same frame");
    for (std::size_t w = 0; w < a.size(); ++w) {
        if (a.frame().name(w) != b.frame().name(w) || a.valuation()[w] != b.valuation()[w])
            throw ModelError("l-isomorphism needs the same frame and valuation");
        for (std::size_t u = 0; u < a.size(); ++u)
            if (a.frame().rel(w, u) != b.frame().rel(w, u)) throw ModelError("l-isomorphism needs the same frame");
    }
    for (std::size_t w = 0; w < a.size(); ++w) {
        int wi = static_cast<int>(w);
        if (!a.has_theory(wi)) continue;
        for (const auto& f : family)
            if (a.theory(wi)->derives(f) != b.theory(wi)->derives(f))
                return {false, a.frame().name(w) + ": " + print(f)};
    }
    return {};
}

// ---------------------------------------------------------------- soundness suites

std::vector<Formula> instance_family(const std::vector<std::string>& atoms, int depth, Lang lang) {
    std::vector<Formula> base{Formula::bot(lang), Formula::top(lang)};
    for (const auto& p : atoms) {
        base.push_back(Formula::atom(p, lang));
        base.push_back(Formula::neg(Formula::atom(p, lang)));
    }
    std::vector<Formula> out = base;
    std::vector<Formula> layer = base;
    for (int d = 1; d <= depth; ++d) {
        std::vector<Formula> next;
        for (const auto& x : layer) {
            if (x.modal_depth() != d - 1) continue;
            next.push_back(Formula::lbox(x));
        }
        for (const auto& p : atoms) next.push_back(Formula::ldia(Formula::atom(p, lang)));
        for (const auto& f : next)
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
        layer = next;
    }
    return out;
}

std::vector<Formula> axiom_instances(SuiteLogic logic, const std::vector<Formula>& fs) {
    std::vector<Formula> out;
    if (fs.empty()) return out;
    auto B = [](const Formula& x) { return Formula::lbox(x); };
    auto I = [](const Formula& x, const Formula& y) { return Formula::imp(x, y); };
    for (const auto& a : fs) {
        for (const auto& b : fs) out.push_back(I(B(I(a, b)), I(B(a), B(b))));
        if (logic != SuiteLogic::K) out.push_back(I(B(a), B(B(a))));
        if (logic == SuiteLogic::S4) out.push_back(I(B(a), a));
        if (logic == SuiteLogic::GL || logic == SuiteLogic::ILM) out.push_back(I(B(I(B(a), a)), B(a)));
    }
    if (logic == SuiteLogic::ILM) {
        auto R = [](const Formula& x, const Formula& y) { return Formula::rhd(x, y); };
        auto C = [](const Formula& x, const Formula& y) { return Formula::conj(x, y); };
        std::vector<Formula> il;
        for (const auto& a : fs) {
            il.push_back(R(Formula::ldia(a), a));
            for (const auto& b : fs) {
                il.push_back(I(B(I(a, b)), R(a, b)));
                for (const auto& c : fs) {
                    il.push_back(I(C(R(a, b), R(b, c)), R(a, c)));
                    il.push_back(I(C(R(b, a), R(c, a)), R(Formula::disj(b, c), a)));
                    il.push_back(I(R(a, b), R(C(B(c), a), C(B(c), b))));
                }
            }
        }
        for (const auto& x : il) {
            out.push_back(x);
            out.push_back(B(x));
        }
    }
    return out;
}

std::vector<std::string> soundness_suite(const ProvabilityModel& p, SuiteLogic logic,
                                         const std::vector<Formula>& fillers) {
    std::vector<std::string> fails;
    for (const auto& ax : axiom_instances(logic, fillers))
        for (std::size_t w = 0; w < p.size(); ++w)
            if (!p.forces(static_cast<int>(w), ax)) fails.push_back(p.frame().name(w) + ": " + print(ax));
    return fails;
}

std::string modal_completeness_violation(const ProvabilityModel& p, const std::vector<Formula>& family) {
    for (std::size_t w = 0; w < p.size(); ++w) {
        int wi = static_cast<int>(w);
        if (!p.has_theory(wi)) continue;
        for (const auto& a : family) {
            if (!is_purely_modal(a)) continue;
            if (p.forces_plus(wi, a) && !p.theory(wi)->derives(a)) return p.frame().name(w) + ": " + print(a);
        }
    }
    return "";
}

}  // namespace provmod
