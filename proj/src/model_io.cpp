#include "provmod/model_io.hpp"

#include <fstream>
#include <sstream>

namespace provmod {

namespace {

constexpr int kVersion = 1;

std::vector<std::string> world_list(const Json& j) {
    if (!j.contains("worlds") || !j["worlds"].is_array() || j["worlds"].empty())
        throw SchemaError("\"worlds\" must be a nonempty array");
    std::vector<std::string> ws;
    for (const auto& w : j["worlds"]) {
        if (!w.is_string()) throw SchemaError("world ids must be strings");
        ws.push_back(w.get<std::string>());
    }
    return ws;
}

std::vector<std::pair<std::string, std::string>> pair_list(const Json& j, const char* what) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of pairs");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw SchemaError(std::string(what) + " must be an array of [w, u] string pairs");
        out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return out;
}

std::map<std::string, std::set<std::string>> valuation_map(const Json& j) {
    std::map<std::string, std::set<std::string>> v;
    if (!j.contains("valuation")) return v;
    if (!j["valuation"].is_object()) throw SchemaError("\"valuation\" must be an object");
    for (const auto& [w, ps] : j["valuation"].items()) {
        if (!ps.is_array()) throw SchemaError("valuation entries must be arrays of atoms");
        for (const auto& p : ps) v[w].insert(p.get<std::string>());
    }
    return v;
}

Valuation to_valuation(const std::vector<std::string>& ws, const std::map<std::string, std::set<std::string>>& m) {
    Valuation v(ws.size());
    for (const auto& [w, ps] : m) {
        auto it = std::find(ws.begin(), ws.end(), w);
        if (it == ws.end()) throw SchemaError("valuation mentions unknown world " + w);
        v[it - ws.begin()] = ps;
    }
    return v;
}

Lang lang_of(const Json& j) {
    std::string l = j.value("language", "box");
    if (l == "box") return Lang::Box;
    if (l == "rhd") return Lang::Rhd;
    if (l == "omega") return Lang::Omega;
    throw SchemaError("unknown language tag " + l);
}

const char* lang_tag(Lang l) {
    switch (l) {
    case Lang::Box: return "box";
    case Lang::Rhd: return "rhd";
    case Lang::Omega: return "omega";
    }
    return "box";
}

Json base_json(const Frame& f, const Valuation& val) {
    Json j;
    j["version"] = kVersion;
    j["worlds"] = f.names();
    j["edges"] = Json::array();
    for (auto [a, b] : f.edges()) j["edges"].push_back({f.name(a), f.name(b)});
    j["valuation"] = Json::object();
    for (std::size_t w = 0; w < f.size(); ++w)
        if (!val[w].empty()) j["valuation"][f.name(static_cast<int>(w))] = val[w];
    return j;
}

Json descriptor_json(const Theory& t) {
    if (!t || t->descriptor().empty()) throw SchemaError("theory has no descriptor");
    return Json::parse(t->descriptor());
}

}  // namespace

Theory theory_from_descriptor(const Json& d, Lang lang, std::shared_ptr<const KripkeModel> host) {
    if (!d.is_object() || !d.contains("kind")) throw SchemaError("theory descriptor needs a \"kind\"");
    std::string kind = d["kind"].get<std::string>();
    if (kind == "finite_axioms_mp") {
        std::vector<Formula> ax;
        for (const auto& a : d.value("axioms", Json::array())) ax.push_back(parse(a.get<std::string>(), lang));
        return finite_axioms_mp(ax, lang);
    }
    if (kind == "gl_theorems") {
        if (lang != Lang::Box) throw SchemaError("gl_theorems is an L_box theory");
        return gl_theorems();
    }
    if (kind == "gl_n") {
        if (lang != Lang::Box) throw SchemaError("gl_n is an L_box theory");
        return gl_n(d.at("n").get<int>());
    }
    if (kind == "kripke_world") {
        if (!host) throw SchemaError("kripke_world descriptor outside a model document");
        return kripke_world_theory(host, host->frame.index(d.at("world").get<std::string>()),
                                   d.value("transitive", false));
    }
    throw SchemaError("unsupported theory kind " + kind);
}

Document load_document(const Json& j) {
    if (!j.is_object()) throw SchemaError("model document must be an object");
    if (j.contains("version") && j["version"] != kVersion) throw SchemaError("unsupported document version");
    auto ws = world_list(j);
    auto vm = valuation_map(j);
    Lang lang = lang_of(j);
    if (j.contains("edges") && j["edges"].is_object()) {
        std::vector<std::vector<std::pair<std::string, std::string>>> rels;
        for (int n = 0;; ++n) {
            auto key = std::to_string(n);
            if (!j["edges"].contains(key)) break;
            rels.push_back(pair_list(j["edges"][key], "indexed edges"));
        }
        if (rels.empty() || rels.size() != j["edges"].size())
            throw SchemaError("indexed edges must be keyed \"0\", \"1\", ... without gaps");
        Valuation val = to_valuation(ws, vm);
        auto frames = std::make_shared<std::vector<Frame>>();
        for (const auto& es : rels) frames->emplace_back(ws, es);
        auto sval = std::make_shared<const Valuation>(val);
        std::vector<std::vector<Theory>> th(ws.size());
        const Json& tj = j.value("theories", Json::object());
        for (const auto& [w, levels] : tj.items()) {
            int wi = (*frames)[0].index(w);
            th[wi].resize(rels.size());
            for (const auto& [n, d] : levels.items()) {
                int ni = std::stoi(n);
                if (ni < 0 || ni >= static_cast<int>(rels.size())) throw SchemaError("theory index out of range");
                if (d.value("kind", "") == "cone")
                    th[wi][ni] = poly_cone_theory(frames, sval, wi, ni);
                else
                    th[wi][ni] = theory_from_descriptor(d, Lang::Omega);
            }
        }
        return std::make_shared<PolyModel>(ws, rels, val, th);
    }
    auto edges = pair_list(j.value("edges", Json::array()), "\"edges\"");
    if (j.contains("preorders")) {
        std::map<std::string, std::vector<std::pair<std::string, std::string>>> pre;
        for (const auto& [w, ps] : j["preorders"].items()) pre[w] = pair_list(ps, "preorders");
        return VeltmanModel::make(ws, edges, pre, vm);
    }
    KripkeModel k = KripkeModel::make(ws, edges, vm);
    if (!j.contains("theories")) return k;
    auto host = std::make_shared<const KripkeModel>(k);
    std::vector<Theory> th(ws.size());
    for (const auto& [w, d] : j["theories"].items()) th[k.frame.index(w)] = theory_from_descriptor(d, lang, host);
    auto p = make_pre_model(k.frame, k.val, th, lang);
    std::string cert = j.value("certificate", "");
    if (cert == "generated") {
        std::vector<Formula> fam;
        for (const auto& e : j.value("family", Json::array())) fam.push_back(parse(e.get<std::string>(), lang));
        p = lang == Lang::Rhd ? generate_ilm(*p, fam) : generate_gl(*p);
    } else {
        p->certificate = cert;
    }
    return p;
}

Document load_document_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    return load_document(j);
}

Json save_kripke(const KripkeModel& k) { return base_json(k.frame, k.val); }

Json save_veltman(const VeltmanModel& v) {
    Json j = base_json(v.frame(), v.base.val);
    j["language"] = "rhd";
    j["preorders"] = Json::object();
    const Frame& f = v.frame();
    for (std::size_t w = 0; w < v.size(); ++w) {
        Json ps = Json::array();
        for (int u : f.succ(w))
            for (int x : f.succ(w))
                if (u != x && v.le[w][u][x]) ps.push_back({f.name(u), f.name(x)});
        if (!ps.empty()) j["preorders"][f.name(w)] = ps;
    }
    return j;
}

Json save_pre_model(const ProvabilityModel& p) {
    Json j = base_json(p.frame(), p.valuation());
    j["language"] = lang_tag(p.lang());
    j["theories"] = Json::object();
    for (std::size_t w = 0; w < p.size(); ++w)
        if (p.has_theory(static_cast<int>(w)))
            j["theories"][p.frame().name(w)] = descriptor_json(p.theory(static_cast<int>(w)));
    if (!p.certificate.empty()) j["certificate"] = p.certificate;
    if (p.lang() == Lang::Rhd) {
        j["family"] = Json::array();
        for (const auto& e : p.e_family()) j["family"].push_back(print(e));
        j["family_bounded"] = p.family_bounded();
    }
    return j;
}

Json save_poly(const PolyModel& p) {
    Json j = base_json(p.rel(0), p.valuation());
    j["language"] = "omega";
    j["edges"] = Json::object();
    for (int n = 0; n <= p.max_index(); ++n) {
        Json es = Json::array();
        for (auto [a, b] : p.rel(n).edges()) es.push_back({p.names()[a], p.names()[b]});
        j["edges"][std::to_string(n)] = es;
    }
    j["theories"] = Json::object();
    for (std::size_t w = 0; w < p.size(); ++w) {
        if (!p.accessible(static_cast<int>(w))) continue;
        for (int n = 0; n <= p.max_index(); ++n)
            j["theories"][p.names()[w]][std::to_string(n)] = descriptor_json(p.theory(static_cast<int>(w), n));
    }
    return j;
}

Json save_unravelled(const Unravelled& u) {
    KripkeModel k = u.as_kripke();
    Json j = base_json(k.frame, k.val);
    j["sibling_order"] = Json::array();
    for (std::size_t s = 0; s < u.size(); ++s)
        for (std::size_t t = 0; t < u.size(); ++t)
            if (s != t && u.le[s][t]) j["sibling_order"].push_back({u.names[s], u.names[t]});
    return j;
}

Json save_document(const Document& d) {
    return std::visit(
        [](const auto& m) -> Json {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, KripkeModel>) return save_kripke(m);
            else if constexpr (std::is_same_v<T, VeltmanModel>) return save_veltman(m);
            else if constexpr (std::is_same_v<T, PModel>) return save_pre_model(*m);
            else return save_poly(*m);
        },
        d);
}

std::string document_dot(const Document& d) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, KripkeModel>) return to_dot(m);
            else if constexpr (std::is_same_v<T, VeltmanModel>) return to_dot(m.base);
            else if constexpr (std::is_same_v<T, PModel>) return to_dot(m->kripke());
            else return to_dot(KripkeModel(m->rel(0), m->valuation()));
        },
        d);
}

}  // namespace provmod
