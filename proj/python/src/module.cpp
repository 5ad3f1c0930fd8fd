#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "provmod/decide.hpp"
#include "provmod/formula.hpp"
#include "provmod/model_io.hpp"
#include "provmod/provability.hpp"
#include "provmod/tprov.hpp"

namespace py = pybind11;
using namespace provmod;

namespace {

std::string world_name(const Document& d, int w) {
    if (auto* k = std::get_if<KripkeModel>(&d)) return k->frame.name(w);
    if (auto* v = std::get_if<VeltmanModel>(&d)) return v->frame().name(w);
    if (auto* p = std::get_if<PModel>(&d)) return (*p)->frame().name(w);
    return std::get<std::shared_ptr<PolyModel>>(d)->names()[w];
}

// Results cross the boundary as JSON text; the Python wrapper decodes them.
std::string decide_json(const std::string& logic, const std::string& text, int bound) {
    Lang lang = logic == "ilm" ? Lang::Rhd : Lang::Box;
    Formula a = parse(text, lang);
    DecisionVerdict v;
    if (logic == "ilm") v = decide_ilm(a, bound);
    else if (logic == "gl") v = decide_gl(a);
    else if (logic == "k") v = decide_k(a);
    else if (logic == "k4") v = decide_k4(a);
    else if (logic == "s4") v = decide_s4(a);
    else throw std::invalid_argument("unknown logic " + logic);
    Json j{{"formula", print(a)}, {"status", status_name(v.status)}};
    std::optional<Document> cm;
    if (v.countermodel) cm = *v.countermodel;
    if (v.veltman_countermodel) cm = *v.veltman_countermodel;
    if (cm) {
        j["countermodel"] = save_document(*cm);
        j["world"] = world_name(*cm, v.world);
    }
    return j.dump();
}

std::string countermodel_json(const std::string& logic, const std::string& text, int bound) {
    PipelineResult r = logic == "ilm" ? countermodel_pipeline_ilm(parse(text, Lang::Rhd), bound)
                                      : countermodel_pipeline_gl(parse(text, Lang::Box));
    Json j{{"model", save_pre_model(*r.model)},
           {"world", r.model->frame().name(r.world)},
           {"n", r.n},
           {"soundness_failures", r.soundness_failures}};
    return j.dump();
}

bool eval_json(const std::string& doc, const std::string& world, const std::string& text) {
    Document d = load_document(Json::parse(doc));
    if (auto* k = std::get_if<KripkeModel>(&d)) return forces(*k, k->frame.index(world), parse(text, Lang::Box));
    if (auto* v = std::get_if<VeltmanModel>(&d)) return veltman_forces(*v, v->frame().index(world), parse(text, Lang::Rhd));
    if (auto* p = std::get_if<PModel>(&d)) return pm_forces(**p, (*p)->frame().index(world), parse(text, (*p)->lang()));
    auto& g = std::get<std::shared_ptr<PolyModel>>(d);
    return glp_forces(*g, g->index(world), parse(text, Lang::Omega));
}

std::string interpret_json(const std::string& descriptor, const std::string& text) {
    Theory t = theory_from_descriptor(Json::parse(descriptor), Lang::Box);
    InterpretationResult r = t_interpretation(parse(text, Lang::Box), *t);
    Json j{{"formula", print(r.formula)}, {"value", r.truth}, {"phrases", Json::array()}};
    for (const auto& tr : r.trace)
        j["phrases"].push_back({{"phrase", tr.phrase.str()}, {"value", tr.value}, {"bare_atoms", tr.bare_atoms}});
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Provability models for GL, ILM and GLP";
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<EnvelopeError>(m, "EnvelopeError", PyExc_ValueError);
    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);

    m.def("canonical", [](const std::string& text, const std::string& lang) { return print(parse(text, lang_from_name(lang))); },
          py::arg("text"), py::arg("lang") = "box");
    m.def("is_purely_modal", [](const std::string& text, const std::string& lang) {
        return is_purely_modal(parse(text, lang_from_name(lang)));
    }, py::arg("text"), py::arg("lang") = "box");
    m.def("pre_interpolant", [](const std::string& text, const std::string& lang) {
        return print(pre_interpolant(parse(text, lang_from_name(lang))));
    }, py::arg("text"), py::arg("lang") = "box");
    m.def("classical_entails", [](const std::vector<std::string>& gamma, const std::string& text, const std::string& lang) {
        Lang l = lang_from_name(lang);
        std::vector<Formula> g;
        for (const auto& s : gamma) g.push_back(parse(s, l));
        return classical_entails(g, parse(text, l));
    }, py::arg("gamma"), py::arg("text"), py::arg("lang") = "box");
    m.def("phrase_cnf", [](const std::string& text) {
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
        for (const auto& ph : phrase_cnf(parse(text, Lang::Box))) {
            std::vector<std::string> x, y;
            for (const auto& f : ph.x) x.push_back(print(f));
            for (const auto& f : ph.y) y.push_back(print(f));
            out.emplace_back(x, y);
        }
        return out;
    });
    m.def("representatives", [](const std::string& logic, int n, const std::vector<std::string>& atoms) {
        RepresentativeSet r = logic == "ilm" ? representatives_ilm(n, atoms) : representatives_gl(n, atoms);
        std::vector<std::string> out;
        for (const auto& f : r.members) out.push_back(print(f));
        return out;
    });
    m.def("gl_consequence", [](const std::vector<std::string>& gamma, const std::string& text) {
        std::vector<Formula> g;
        for (const auto& s : gamma) g.push_back(parse(s, Lang::Box));
        return gl_consequence(g, parse(text, Lang::Box));
    });
    m.def("_decide", &decide_json);
    m.def("_countermodel", &countermodel_json);
    m.def("_eval", &eval_json);
    m.def("_interpret", &interpret_json);
}
