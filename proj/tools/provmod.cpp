#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "provmod/decide.hpp"
#include "provmod/glp.hpp"
#include "provmod/model_io.hpp"
#include "provmod/provability.hpp"
#include "provmod/tprov.hpp"

using namespace provmod;

namespace {

struct Opts {
    std::string logic = "gl";
    int bound = 3;
    std::string family_file;
    bool json = false;
    unsigned seed = 12345;
    bool dot = false;
    std::string out;
};

std::vector<Formula> read_family(const std::string& path, Lang lang) {
    std::vector<Formula> fam;
    if (path.empty()) return fam;
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read family file " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        fam.push_back(parse(line, lang));
    }
    return fam;
}

void emit(const Opts& o, const Json& j, const std::string& text) {
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

void write_model(const Opts& o, const Document& d) {
    if (o.out.empty()) return;
    std::ofstream f(o.out);
    f << save_document(d).dump(2) << "\n";
    if (o.dot) {
        std::ofstream g(o.out + ".dot");
        g << document_dot(d);
    }
}

Lang lang_for(const std::string& logic) {
    if (logic == "ilm") return Lang::Rhd;
    if (logic == "glp") return Lang::Omega;
    return Lang::Box;
}

int cmd_decide(const Opts& o, const std::string& text) {
    Formula a = parse(text, lang_for(o.logic));
    DecisionVerdict v;
    if (o.logic == "ilm")
        v = decide_ilm(a, o.bound);
    else if (o.logic == "gl")
        v = decide_gl(a);
    else if (o.logic == "k")
        v = decide_k(a);
    else if (o.logic == "k4")
        v = decide_k4(a);
    else if (o.logic == "s4")
        v = decide_s4(a);
    else
        throw std::invalid_argument("decide supports k, k4, s4, gl, ilm");
    Json j{{"formula", print(a)}, {"logic", o.logic}, {"status", status_name(v.status)}};
    if (v.bound) j["bound"] = *v.bound;
    std::optional<Document> cm;
    if (v.countermodel) cm = *v.countermodel;
    if (v.veltman_countermodel) cm = *v.veltman_countermodel;
    std::ostringstream os;
    os << status_name(v.status) << "\n";
    if (cm) {
        Json mj = save_document(*cm);
        std::string w = std::visit(
            [&](const auto& m) -> std::string {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, KripkeModel>) return m.frame.name(v.world);
                else if constexpr (std::is_same_v<T, VeltmanModel>) return m.frame().name(v.world);
                else return "";
            },
            *cm);
        j["countermodel"] = mj;
        j["world"] = w;
        os << "world " << w << "\n" << mj.dump(2) << "\n";
        if (o.dot) os << document_dot(*cm);
        write_model(o, *cm);
    }
    emit(o, j, os.str());
    return v.status == Status::NonTheorem ? 1 : 0;
}

std::string world_name(const Document& d, int w) {
    return std::visit(
        [&](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, KripkeModel>) return m.frame.name(w);
            else if constexpr (std::is_same_v<T, VeltmanModel>) return m.frame().name(w);
            else if constexpr (std::is_same_v<T, PModel>) return m->frame().name(w);
            else return m->names()[w];
        },
        d);
}

int world_index(const Document& d, const std::string& w) {
    return std::visit(
        [&](const auto& m) -> int {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, KripkeModel>) return m.frame.index(w);
            else if constexpr (std::is_same_v<T, VeltmanModel>) return m.frame().index(w);
            else if constexpr (std::is_same_v<T, PModel>) return m->frame().index(w);
            else return m->index(w);
        },
        d);
}

int cmd_eval(const Opts& o, const std::string& file, const std::string& world, const std::string& text) {
    Document d = load_document_file(file);
    int w = world_index(d, world);
    bool r = std::visit(
        [&](const auto& m) -> bool {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, KripkeModel>) return forces(m, w, parse(text, Lang::Box));
            else if constexpr (std::is_same_v<T, VeltmanModel>) return veltman_forces(m, w, parse(text, Lang::Rhd));
            else if constexpr (std::is_same_v<T, PModel>) {
                auto fam = read_family(o.family_file, m->lang());
                if (!fam.empty()) m->set_e_family(fam, true);
                return pm_forces(*m, w, parse(text, m->lang()));
            } else
                return glp_forces(*m, w, parse(text, Lang::Omega));
        },
        d);
    Json j{{"world", world}, {"formula", text}, {"value", r}};
    if (auto* p = std::get_if<PModel>(&d)) j["family_bounded"] = (*p)->lang() == Lang::Rhd && (*p)->family_bounded();
    emit(o, j, std::string(r ? "true" : "false") + "\n");
    return r ? 0 : 1;
}

int cmd_generate(const Opts& o, const std::string& file) {
    Document d = load_document_file(file);
    auto* p = std::get_if<PModel>(&d);
    if (!p) throw SchemaError("generate needs a pre-model document with theories");
    PModel g = (*p)->lang() == Lang::Rhd ? generate_ilm(**p, read_family(o.family_file, Lang::Rhd))
                                         : generate_gl(**p);
    Document gd = g;
    Json j = save_document(gd);
    write_model(o, gd);
    std::cout << j.dump(2) << "\n";
    if (o.dot) std::cout << document_dot(gd);
    return 0;
}

int cmd_countermodel(const Opts& o, const std::string& text) {
    PipelineResult r;
    if (o.logic == "gl")
        r = countermodel_pipeline_gl(parse(text, Lang::Box));
    else if (o.logic == "ilm")
        r = countermodel_pipeline_ilm(parse(text, Lang::Rhd), o.bound, read_family(o.family_file, Lang::Rhd));
    else
        throw std::invalid_argument("countermodel supports gl and ilm");
    Document d = r.model;
    Json j{{"model", save_document(d)},
           {"world", r.model->frame().name(r.world)},
           {"n", r.n},
           {"soundness_failures", r.soundness_failures}};
    if (r.model->lang() == Lang::Rhd) j["family_bounded"] = r.model->family_bounded();
    write_model(o, d);
    std::cout << j.dump(2) << "\n";
    if (o.dot) std::cout << document_dot(d);
    return r.soundness_failures.empty() ? 0 : 1;
}

int cmd_unravel(const Opts& o, const std::string& file) {
    Document d = load_document_file(file);
    auto* v = std::get_if<VeltmanModel>(&d);
    if (!v) throw SchemaError("unravel needs a Veltman model document");
    Unravelled u = unravel(*v);
    Json j = save_unravelled(u);
    std::cout << j.dump(2) << "\n";
    if (o.dot) std::cout << to_dot(u.as_kripke());
    return 0;
}

int cmd_interpret(const Opts& o, const std::string& desc, const std::string& text) {
    Json dj;
    try {
        dj = Json::parse(desc);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("invalid theory descriptor: ") + e.what());
    }
    Theory t = theory_from_descriptor(dj, Lang::Box);
    InterpretationResult r = t_interpretation(parse(text, Lang::Box), *t);
    Json j{{"formula", print(r.formula)}, {"theory", dj}, {"value", r.truth}, {"phrases", Json::array()}};
    std::ostringstream os;
    os << (r.truth ? "true" : "false") << "\n";
    for (const auto& tr : r.trace) {
        Json pj{{"phrase", tr.phrase.str()}, {"value", tr.value}, {"bare_atoms", tr.bare_atoms}};
        pj["antecedent"] = Json::array();
        for (const auto& [f, d] : tr.antecedent) pj["antecedent"].push_back({{"formula", print(f)}, {"derived", d}});
        pj["witness"] = tr.witness ? Json(print(*tr.witness)) : Json(nullptr);
        j["phrases"].push_back(pj);
        os << "  " << tr.phrase.str() << " : " << (tr.value ? "true" : "false");
        if (tr.witness) os << " via " << print(*tr.witness);
        if (tr.bare_atoms) os << " (bare atoms ignored)";
        os << "\n";
    }
    emit(o, j, os.str());
    return r.truth ? 0 : 1;
}

int cmd_reps(const Opts& o, int n, const std::string& atoms_csv) {
    std::vector<std::string> atoms;
    std::stringstream ss(atoms_csv);
    for (std::string a; std::getline(ss, a, ',');)
        if (!a.empty()) atoms.push_back(a);
    RepresentativeSet r = o.logic == "ilm" ? representatives_ilm(n, atoms) : representatives_gl(n, atoms);
    Json j{{"logic", r.logic}, {"n", r.n}, {"atoms", r.atoms}, {"members", Json::array()}};
    std::ostringstream os;
    for (const auto& m : r.members) {
        j["members"].push_back(print(m));
        os << print(m) << "\n";
    }
    emit(o, j, os.str());
    return 0;
}

std::vector<Formula> random_extras(unsigned seed, Lang lang, int count) {
    std::mt19937 rng(seed);
    std::vector<Formula> out;
    std::function<Formula(int)> gen = [&](int d) -> Formula {
        int k = std::uniform_int_distribution<int>(0, d > 0 ? 4 : 1)(rng);
        if (k == 0) return Formula::atom(rng() % 2 ? "p" : "q", lang);
        if (k == 1) return Formula::bot(lang);
        if (k == 2) return Formula::imp(gen(d - 1), gen(d - 1));
        if (k == 3) return Formula::neg(gen(d - 1));
        return lang == Lang::Omega ? Formula::boxn(0, gen(d - 1)) : Formula::lbox(gen(d - 1));
    };
    for (int i = 0; i < count; ++i) out.push_back(gen(2));
    return out;
}

int cmd_check(const Opts& o, const std::string& file, const std::string& suite) {
    Document d = load_document_file(file);
    Json j{{"suite", suite}};
    std::vector<std::string> problems;
    if (auto* k = std::get_if<KripkeModel>(&d)) {
        if (suite != "frame") throw std::invalid_argument("Kripke documents support the frame suite");
        FrameReport r = check_frame(k->frame);
        auto put = [&](const char* name, const PropertyCheck& c) {
            j[name] = {{"holds", c.holds}, {"witness", c.witness}};
        };
        put("reflexive", r.reflexive);
        put("irreflexive", r.irreflexive);
        put("transitive", r.transitive);
        put("converse_well_founded", r.converse_well_founded);
        put("tree", r.tree);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (auto* v = std::get_if<VeltmanModel>(&d)) {
        if (suite != "frame") throw std::invalid_argument("Veltman documents support the frame suite");
        auto viol = v->violation();
        j["valid"] = !viol.has_value();
        if (viol) j["witness"] = *viol;
        std::cout << j.dump(2) << "\n";
        return viol ? 1 : 0;
    }
    if (auto* pp = std::get_if<std::shared_ptr<PolyModel>>(&d)) {
        const PolyModel& p = **pp;
        auto fam = read_family(o.family_file, Lang::Omega);
        if (fam.empty()) fam = glp_instance_family({"p"}, 1, p.max_index());
        if (suite == "glp") {
            GlpReport r = check_glp_model(p, fam);
            for (const auto& v : r.violations) problems.push_back(v.clause + ": " + v.witness);
        } else if (suite == "soundness-glp") {
            problems = glp_soundness_suite(p, {"p"}, 1).failures;
        } else {
            throw std::invalid_argument("poly documents support the glp and soundness-glp suites");
        }
    } else {
        const ProvabilityModel& p = *std::get<PModel>(d);
        auto fam = read_family(o.family_file, p.lang());
        if (fam.empty()) {
            fam = instance_family({"p"}, 1, p.lang());
            auto extra = random_extras(o.seed, p.lang(), 10);
            fam.insert(fam.end(), extra.begin(), extra.end());
        }
        if (suite == "frame") {
            FrameReport r = check_frame(p.frame());
            j["transitive"] = r.transitive.holds;
            j["converse_well_founded"] = r.converse_well_founded.holds;
            j["tree"] = r.tree.holds;
        } else if (suite == "classicality") {
            for (std::size_t w = 0; w < p.size(); ++w)
                if (p.has_theory(static_cast<int>(w))) {
                    auto c = classicality_violation(*p.theory(static_cast<int>(w)), fam);
                    if (!c.empty()) problems.push_back(p.frame().name(w) + ": " + c);
                }
        } else if (suite == "completeness") {
            auto c = modal_completeness_violation(p, fam);
            if (!c.empty()) problems.push_back(c);
        } else if (suite.rfind("soundness-", 0) == 0) {
            std::string l = suite.substr(10);
            SuiteLogic sl = l == "k" ? SuiteLogic::K
                          : l == "k4" ? SuiteLogic::K4
                          : l == "s4" ? SuiteLogic::S4
                          : l == "gl" ? SuiteLogic::GL
                          : l == "ilm" ? SuiteLogic::ILM
                                       : throw std::invalid_argument("unknown soundness suite " + suite);
            std::vector<std::string> atoms;
            for (const auto& a : atoms_of(fam)) atoms.push_back(a);
            problems = soundness_suite(p, sl, instance_family(atoms, sl == SuiteLogic::ILM ? 0 : 1, p.lang()));
        } else {
            throw std::invalid_argument("unknown suite " + suite);
        }
    }
    j["violations"] = problems;
    j["passed"] = problems.empty();
    std::cout << j.dump(2) << "\n";
    return problems.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Provability models: decide, evaluate, generate and interpret modal formulas"};
    app.require_subcommand(1);
    Opts o;
    auto common = [&](CLI::App* c) {
        c->add_option("--logic", o.logic, "k, k4, s4, gl, ilm or glp")
            ->check(CLI::IsMember({"k", "k4", "s4", "gl", "ilm", "glp"}));
        c->add_option("--bound", o.bound, "world bound for ILM search");
        c->add_option("--family", o.family_file, "file with one formula per line");
        c->add_flag("--json", o.json, "machine-readable output");
        c->add_option("--seed", o.seed, "seed for sampled formulas");
        c->add_flag("--dot", o.dot, "also print DOT");
        c->add_option("-o,--out", o.out, "write the model document here");
    };
    std::string formula, file, world, desc, suite = "frame", atoms;
    int n = 1;

    auto* dec = app.add_subcommand("decide", "decide a formula");
    common(dec);
    dec->add_option("formula", formula)->required();
    auto* ev = app.add_subcommand("eval", "evaluate a formula at a world of a model document");
    common(ev);
    ev->add_option("model", file)->required();
    ev->add_option("world", world)->required();
    ev->add_option("formula", formula)->required();
    auto* gen = app.add_subcommand("generate", "generate the finitary model of a seed");
    common(gen);
    gen->add_option("seed_model", file)->required();
    auto* cm = app.add_subcommand("countermodel", "finitary countermodel of a non-theorem");
    common(cm);
    cm->add_option("formula", formula)->required();
    auto* un = app.add_subcommand("unravel", "unravel a Veltman model");
    common(un);
    un->add_option("model", file)->required();
    auto* in = app.add_subcommand("interpret", "interpret a formula relative to a theory");
    common(in);
    in->add_option("--theory", desc, "theory descriptor JSON")->required();
    in->add_option("formula", formula)->required();
    auto* rp = app.add_subcommand("reps", "representatives of formulas modulo a bounded logic");
    common(rp);
    rp->add_option("--n", n, "height bound");
    rp->add_option("--atoms", atoms, "comma separated atoms");
    auto* ck = app.add_subcommand("check", "property report for a model document");
    common(ck);
    ck->add_option("model", file)->required();
    ck->add_option("--suite", suite,
                   "frame, classicality, completeness, glp, soundness-glp, soundness-{k,k4,s4,gl,ilm}");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*dec) return cmd_decide(o, formula);
        if (*ev) return cmd_eval(o, file, world, formula);
        if (*gen) return cmd_generate(o, file);
        if (*cm) return cmd_countermodel(o, formula);
        if (*un) return cmd_unravel(o, file);
        if (*in) return cmd_interpret(o, desc, formula);
        if (*rp) return cmd_reps(o, n, atoms);
        if (*ck) return cmd_check(o, file, suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
