#include "provmod/kripke.hpp"

#include <functional>
#include <sstream>
#include <unordered_map>

namespace provmod {

Frame::Frame(std::vector<std::string> worlds, const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(worlds)) {
    if (names_.empty()) throw ModelError("a model needs at least one world");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], static_cast<int>(i)).second)
            throw ModelError("duplicate world: " + names_[i]);
    }
    std::size_t n = names_.size();
    succ_.assign(n, {});
    pred_.assign(n, {});
    mat_.assign(n, std::vector<bool>(n, false));
    for (const auto& e : edges) {
        int a = index(e.first), b = index(e.second);
        if (mat_[a][b]) continue;
        mat_[a][b] = true;
        succ_[a].push_back(b);
        pred_[b].push_back(a);
    }
    plus_ = mat_;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (plus_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (plus_[k][j]) plus_[i][j] = true;
}

int Frame::index(const std::string& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw ModelError("unknown world: " + w);
    return it->second;
}

std::vector<std::pair<int, int>> Frame::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t w = 0; w < size(); ++w)
        for (int u : succ_[w]) out.emplace_back(static_cast<int>(w), u);
    return out;
}

std::vector<int> Frame::succ_plus(int w) const {
    std::vector<int> out;
    for (std::size_t u = 0; u < size(); ++u)
        if (plus_[w][u]) out.push_back(static_cast<int>(u));
    return out;
}

bool Frame::is_acyclic() const {
    for (std::size_t w = 0; w < size(); ++w)
        if (plus_[w][w]) return false;
    return true;
}

bool Frame::is_transitive() const { return check_frame(*this).transitive.holds; }
bool Frame::is_tree() const { return check_frame(*this).tree.holds; }

bool Frame::immediate_pred(int w, int u) const {
    if (!mat_[w][u]) return false;
    for (std::size_t v = 0; v < size(); ++v)
        if (plus_[w][v] && plus_[v][u]) return false;
    return true;
}

int Frame::pred(int w) const {
    if (!is_tree()) throw ModelError("pred is only defined on trees");
    for (int u : pred_[w])
        if (immediate_pred(u, w)) return u;
    throw ModelError("world " + names_[w] + " has no predecessor");
}

bool Frame::sim(int w, int u) const {
    if (w == u) return true;
    for (std::size_t v = 0; v < size(); ++v)
        if (immediate_pred(static_cast<int>(v), w) && immediate_pred(static_cast<int>(v), u)) return true;
    return false;
}

bool Frame::hat_less(int w, int u) const {
    for (std::size_t v = 0; v < size(); ++v)
        if (sim(w, static_cast<int>(v)) && plus_[v][u]) return true;
    return false;
}

FrameReport check_frame(const Frame& f) {
    FrameReport r;
    std::size_t n = f.size();
    auto nm = [&](std::size_t i) { return f.name(static_cast<int>(i)); };
    for (std::size_t w = 0; w < n && r.reflexive.holds; ++w)
        if (!f.rel(w, w)) r.reflexive = {false, {nm(w)}};
    for (std::size_t w = 0; w < n && r.irreflexive.holds; ++w)
        if (f.rel(w, w)) r.irreflexive = {false, {nm(w)}};
    for (std::size_t a = 0; a < n && r.transitive.holds; ++a)
        for (int b : f.succ(a)) {
            for (int c : f.succ(b))
                if (!f.rel(a, c)) {
                    r.transitive = {false, {nm(a), nm(b), nm(c)}};
                    break;
                }
            if (!r.transitive.holds) break;
        }
    // a cycle witness: shortest path back to a world on a cycle
    for (std::size_t w = 0; w < n && r.converse_well_founded.holds; ++w) {
        if (!f.rel_plus(w, w)) continue;
        std::vector<int> prev(n, -1);
        std::vector<int> queue{static_cast<int>(w)};
        std::vector<bool> seen(n, false);
        int end = -1;
        for (std::size_t qi = 0; qi < queue.size() && end < 0; ++qi) {
            int x = queue[qi];
            for (int y : f.succ(x)) {
                if (y == static_cast<int>(w)) {
                    end = x;
                    break;
                }
                if (!seen[y]) {
                    seen[y] = true;
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        std::vector<std::string> cyc;
        for (int x = end; x != static_cast<int>(w) && x >= 0; x = prev[x]) cyc.insert(cyc.begin(), nm(x));
        cyc.insert(cyc.begin(), nm(w));
        cyc.push_back(nm(w));
        r.converse_well_founded = {false, cyc};
    }
    for (std::size_t v = 0; v < n && r.tree.holds; ++v) {
        const auto& ps = f.pred_list(v);
        for (std::size_t i = 0; i < ps.size() && r.tree.holds; ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                int a = ps[i], b = ps[j];
                if (!f.rel_plus(a, b) && !f.rel_plus(b, a)) {
                    r.tree = {false, {nm(a), nm(b), nm(v)}};
                    break;
                }
            }
    }
    return r;
}

KripkeModel::KripkeModel(Frame f, Valuation v) : frame(std::move(f)), val(std::move(v)) {
    if (val.size() != frame.size()) throw ModelError("valuation size does not match the frame");
}

KripkeModel KripkeModel::make(const std::vector<std::string>& worlds,
                              const std::vector<std::pair<std::string, std::string>>& edges,
                              const std::map<std::string, std::set<std::string>>& valuation) {
    Frame f(worlds, edges);
    Valuation v(f.size());
    for (const auto& [w, ps] : valuation) v[f.index(w)] = ps;
    return KripkeModel(std::move(f), std::move(v));
}

namespace {

using Truth = std::vector<bool>;

template <class ModalCase>
std::vector<Truth> eval_many(std::size_t n, const std::vector<Formula>& as, const Valuation& val, ModalCase modal) {
    std::unordered_map<const Node*, Truth> memo;
    std::function<const Truth&(const Formula&)> go = [&](const Formula& f) -> const Truth& {
        auto it = memo.find(f.node());
        if (it != memo.end()) return it->second;
        Truth r(n, false);
        switch (f.kind()) {
        case Kind::Atom:
            for (std::size_t w = 0; w < n; ++w) r[w] = val[w].count(f.name()) != 0;
            break;
        case Kind::Bot: break;
        case Kind::Imp: {
            Truth x = go(f.left());
            const Truth& y = go(f.right());
            for (std::size_t w = 0; w < n; ++w) r[w] = !x[w] || y[w];
            break;
        }
        default: r = modal(f, go);
        }
        return memo.emplace(f.node(), std::move(r)).first->second;
    };
    std::vector<Truth> out;
    out.reserve(as.size());
    for (const auto& a : as) out.push_back(go(a));
    return out;
}


}  // namespace

std::vector<std::vector<bool>> truth_sets(const KripkeModel& k, const std::vector<Formula>& as) {
    const Frame& fr = k.frame;
    return eval_many(k.size(), as, k.val, [&](const Formula& f, auto& go) {
        if (f.kind() != Kind::Box) throw ModelError("Kripke models evaluate L_box formulas only");
        Truth s = go(f.sub());
        Truth r(fr.size(), true);
        for (std::size_t w = 0; w < fr.size(); ++w)
            for (int u : fr.succ(w))
                if (!s[u]) r[w] = false;
        return r;
    });
}

std::vector<bool> truth_set(const KripkeModel& k, const Formula& a) { return truth_sets(k, {a})[0]; }

bool forces(const KripkeModel& k, int w, const Formula& a) { return truth_set(k, a).at(w); }
bool forces(const KripkeModel& k, const std::string& w, const Formula& a) {
    return forces(k, k.frame.index(w), a);
}

bool forces_plus(const KripkeModel& k, int w, const Formula& a) {
    Truth t = truth_set(k, a);
    for (int u : k.frame.pred_list(w)) {
        bool all = true;
        for (int v : k.frame.succ_plus(u))
            if (!t[v]) all = false;
        if (all) return true;
    }
    return false;
}

bool forces_plus(const KripkeModel& k, const std::string& w, const Formula& a) {
    return forces_plus(k, k.frame.index(w), a);
}

// ---------------------------------------------------------------- Veltman

VeltmanModel::VeltmanModel(KripkeModel k, std::vector<std::vector<std::vector<bool>>> preorders)
    : base(std::move(k)), le(std::move(preorders)) {
    if (le.size() != base.size()) throw ModelError("one preorder per world is required");
    auto v = violation();
    if (v) throw ModelError("invalid Veltman model: " + *v);
}

std::vector<std::vector<std::vector<bool>>> VeltmanModel::minimal_preorders(const Frame& f) {
    std::size_t n = f.size();
    std::vector<std::vector<std::vector<bool>>> le(n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
    for (std::size_t w = 0; w < n; ++w) {
        for (int u : f.succ(w)) {
            le[w][u][u] = true;
            for (int v : f.succ(u))
                if (f.rel(w, v)) le[w][u][v] = true;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (le[w][i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (le[w][k][j]) le[w][i][j] = true;
    }
    return le;
}

VeltmanModel VeltmanModel::make(const std::vector<std::string>& worlds,
                                const std::vector<std::pair<std::string, std::string>>& edges,
                                const std::map<std::string, std::vector<std::pair<std::string, std::string>>>& preorders,
                                const std::map<std::string, std::set<std::string>>& valuation) {
    KripkeModel k = KripkeModel::make(worlds, edges, valuation);
    auto le = minimal_preorders(k.frame);
    for (const auto& [w, pairs] : preorders) {
        int wi = k.frame.index(w);
        for (const auto& [u, v] : pairs) le[wi][k.frame.index(u)][k.frame.index(v)] = true;
    }
    return VeltmanModel(std::move(k), std::move(le));
}

std::optional<std::string> VeltmanModel::violation() const {
    const Frame& f = frame();
    std::size_t n = f.size();
    auto nm = [&](std::size_t i) { return f.name(static_cast<int>(i)); };
    for (std::size_t w = 0; w < n; ++w) {
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                if (!le[w][u][v]) continue;
                if (!f.rel(w, u) || !f.rel(w, v))
                    return "preorder of " + nm(w) + " relates " + nm(u) + "," + nm(v) + " outside its successors";
                for (std::size_t z = 0; z < n; ++z) {
                    if (le[w][v][z] && !le[w][u][z])
                        return "preorder of " + nm(w) + " not transitive at " + nm(u) + "," + nm(v) + "," + nm(z);
                    if (f.rel(v, z) && !f.rel(u, z))
                        return "clause u<=_w v [ z fails at " + nm(w) + "," + nm(u) + "," + nm(v) + "," + nm(z);
                }
            }
        for (int u : f.succ(w)) {
            if (!le[w][u][u]) return "preorder of " + nm(w) + " not reflexive at " + nm(u);
            for (int v : f.succ(u))
                if (!f.rel(w, v) || !le[w][u][v])
                    return "clause w [ u [ v fails at " + nm(w) + "," + nm(u) + "," + nm(v);
        }
    }
    return std::nullopt;
}

std::vector<std::vector<bool>> veltman_truth_sets(const VeltmanModel& vm, const std::vector<Formula>& as,
                                                  bool symmetric) {
    const Frame& fr = vm.frame();
    std::size_t n = fr.size();
    return eval_many(n, as, vm.base.val, [&](const Formula& f, auto& go) {
        if (f.kind() != Kind::Rhd) throw ModelError("Veltman models evaluate L_rhd formulas only");
        Truth x = go(f.left());
        const Truth& y = go(f.right());
        Truth r(n, true);
        for (std::size_t w = 0; w < n && true; ++w) {
            for (int v : fr.succ(w)) {
                bool lhs = x[v];
                bool rhs = false;
                for (std::size_t z = 0; z < n; ++z) {
                    if (!vm.le[w][v][z]) continue;
                    if (y[z]) rhs = true;
                    if (symmetric && x[z]) lhs = true;
                }
                if (lhs && !rhs) {
                    r[w] = false;
                    break;
                }
            }
        }
        return r;
    });
}

std::vector<bool> veltman_truth_set(const VeltmanModel& vm, const Formula& a, bool symmetric) {
    return veltman_truth_sets(vm, {a}, symmetric)[0];
}

bool veltman_forces(const VeltmanModel& v, int w, const Formula& a) { return veltman_truth_set(v, a).at(w); }
bool veltman_forces_symmetric(const VeltmanModel& v, int w, const Formula& a) {
    return veltman_truth_set(v, a, true).at(w);
}

// ---------------------------------------------------------------- unravelling

Unravelled unravel(const VeltmanModel& vm) {
    const Frame& f = vm.frame();
    if (!f.is_acyclic()) throw ModelError("unravelling needs a converse well-founded frame");
    Unravelled u;
    std::function<void(std::vector<int>&, int)> dfs = [&](std::vector<int>& seq, int parent) {
        int me = static_cast<int>(u.seqs.size());
        u.seqs.push_back(seq);
        u.parent.push_back(parent);
        u.children.emplace_back();
        if (parent >= 0) u.children[parent].push_back(me);
        for (int nx : f.succ(seq.back())) {
            seq.push_back(nx);
            dfs(seq, me);
            seq.pop_back();
        }
    };
    for (std::size_t w = 0; w < f.size(); ++w) {
        std::vector<int> seq{static_cast<int>(w)};
        dfs(seq, -1);
    }
    std::size_t n = u.seqs.size();
    u.le.assign(n, std::vector<bool>(n, false));
    for (std::size_t p = 0; p < n; ++p) {
        int lp = u.last(static_cast<int>(p));
        for (int s : u.children[p])
            for (int t : u.children[p])
                if (vm.le[lp][u.last(s)][u.last(t)]) u.le[s][t] = true;
    }
    for (std::size_t s = 0; s < n; ++s) {
        u.val.push_back(vm.base.val[u.last(static_cast<int>(s))]);
        std::string nm;
        for (std::size_t i = 0; i < u.seqs[s].size(); ++i) nm += (i ? "." : "") + f.name(u.seqs[s][i]);
        u.names.push_back(nm);
    }
    return u;
}

KripkeModel Unravelled::as_kripke() const {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t s = 0; s < size(); ++s)
        if (parent[s] >= 0) edges.emplace_back(names[parent[s]], names[s]);
    return KripkeModel(Frame(names, edges), val);
}

std::vector<std::vector<bool>> unravelled_truth_sets(const Unravelled& un, const std::vector<Formula>& as) {
    std::size_t n = un.size();
    return eval_many(n, as, un.val, [&](const Formula& f, auto& go) {
        if (f.kind() != Kind::Rhd) throw ModelError("unravelled models evaluate L_rhd formulas only");
        Truth x = go(f.left());
        const Truth& y = go(f.right());
        Truth r(n, true);
        for (std::size_t s = 0; s < n; ++s) {
            for (int t : un.children[s]) {
                bool lhs = false, rhs = false;
                for (int e : un.children[s]) {
                    if (!un.le[t][e]) continue;
                    lhs = lhs || x[e];
                    rhs = rhs || y[e];
                }
                if (lhs && !rhs) {
                    r[s] = false;
                    break;
                }
            }
        }
        return r;
    });
}

std::vector<bool> unravelled_truth_set(const Unravelled& un, const Formula& a) { return unravelled_truth_sets(un, {a})[0]; }

bool unravelled_forces(const Unravelled& u, int s, const Formula& a) { return unravelled_truth_set(u, a).at(s); }

std::string to_dot(const KripkeModel& k) {
    std::ostringstream os;
    os << "digraph model {\n";
    for (std::size_t w = 0; w < k.size(); ++w) {
        os << "  \"" << k.frame.name(w) << "\" [label=\"" << k.frame.name(w);
        if (!k.val[w].empty()) {
            os << "\\n";
            bool first = true;
            for (const auto& p : k.val[w]) {
                os << (first ? "" : ",") << p;
                first = false;
            }
        }
        os << "\"];\n";
    }
    for (auto [a, b] : k.frame.edges()) os << "  \"" << k.frame.name(a) << "\" -> \"" << k.frame.name(b) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace provmod
