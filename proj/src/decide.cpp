#include "provmod/decide.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace provmod {

const char* status_name(Status s) {
    switch (s) {
    case Status::Theorem: return "theorem";
    case Status::NonTheorem: return "non_theorem";
    case Status::NonTheoremUpToBoundUnknown: return "non_theorem_up_to_bound_unknown";
    }
    return "?";
}

namespace {

// World types over the primitives of A: its atoms and its boxed subformulas.
// A type assigns a truth value to each primitive; other formulas follow classically.
struct TypeSpace {
    std::vector<std::string> atoms;
    std::vector<Formula> boxes;  // boxed subformulas
    std::size_t a = 0, b = 0, k = 0;
    std::unordered_map<const Node*, std::size_t> bit;

    explicit TypeSpace(const Formula& f) {
        for (const auto& p : atoms_of(f)) atoms.push_back(p);
        boxes = modal_subformulas(f);
        a = atoms.size();
        b = boxes.size();
        k = a + b;
        if (k > 22) throw std::runtime_error("formula too large for the type-based decision procedure");
        for (std::size_t i = 0; i < a; ++i) bit.emplace(Formula::atom(atoms[i], f.lang()).node(), i);
        for (std::size_t j = 0; j < b; ++j) bit.emplace(boxes[j].node(), a + j);
    }

    std::uint32_t ntypes() const { return std::uint32_t(1) << k; }
    std::uint32_t boxset(std::uint32_t t) const { return t >> a; }

    bool eval(const Formula& f, std::uint32_t t) const {
        return eval_classical(f, [&](const Formula& g) { return ((t >> bit.at(g.node())) & 1) != 0; });
    }
};

struct TypeTables {
    std::vector<std::uint32_t> good;  // good[t]: set of j with C_j true at t
    std::vector<bool> a_true;
};

TypeTables tabulate(const TypeSpace& ts, const Formula& a) {
    TypeTables tt;
    tt.good.assign(ts.ntypes(), 0);
    tt.a_true.assign(ts.ntypes(), false);
    for (std::uint32_t t = 0; t < ts.ntypes(); ++t) {
        for (std::size_t j = 0; j < ts.b; ++j)
            if (ts.eval(ts.boxes[j].sub(), t)) tt.good[t] |= 1u << j;
        tt.a_true[t] = ts.eval(a, t);
    }
    return tt;
}

bool popcount_less(std::uint32_t x, std::uint32_t y) { return __builtin_popcount(x) < __builtin_popcount(y); }

// Edge condition between types for each logic.
bool successor_ok(ModalLogic lg, const TypeSpace& ts, const TypeTables& tt, std::uint32_t t, std::uint32_t s) {
    std::uint32_t S = ts.boxset(t), T = ts.boxset(s);
    if ((tt.good[s] & S) != S) return false;
    if (lg == ModalLogic::K) return true;
    if ((T & S) != S) return false;
    if (lg == ModalLogic::GL) return T != S;
    return true;
}

bool type_allowed(ModalLogic lg, const TypeSpace& ts, const TypeTables& tt, std::uint32_t t) {
    if (lg != ModalLogic::S4) return true;
    std::uint32_t S = ts.boxset(t);
    return (tt.good[t] & S) == S;
}

// Witness for box i being false at a type with box set S.
bool witness_ok(ModalLogic lg, const TypeSpace& ts, const TypeTables& tt, std::uint32_t S, std::size_t i,
                std::uint32_t s) {
    if (tt.good[s] >> i & 1) return false;
    if ((tt.good[s] & S) != S) return false;
    if (!type_allowed(lg, ts, tt, s)) return false;
    std::uint32_t T = ts.boxset(s);
    if (lg == ModalLogic::K) return true;
    if ((T & S) != S) return false;
    if (lg == ModalLogic::GL) return (T >> i) & 1;
    return true;
}

// alive[S] over box sets
std::vector<bool> solve(ModalLogic lg, const TypeSpace& ts, const TypeTables& tt) {
    std::uint32_t nb = std::uint32_t(1) << ts.b;
    // distinct (boxset, good) profiles of allowed types
    std::set<std::pair<std::uint32_t, std::uint32_t>> prof_set;
    for (std::uint32_t t = 0; t < ts.ntypes(); ++t)
        if (type_allowed(lg, ts, tt, t)) prof_set.insert({ts.boxset(t), tt.good[t]});
    std::vector<std::pair<std::uint32_t, std::uint32_t>> prof(prof_set.begin(), prof_set.end());
    auto wit = [&](std::uint32_t S, std::size_t i, std::uint32_t T, std::uint32_t g) {
        if (g >> i & 1) return false;
        if ((g & S) != S) return false;
        if (lg == ModalLogic::K) return true;
        if ((T & S) != S) return false;
        if (lg == ModalLogic::GL) return ((T >> i) & 1) != 0;
        return true;
    };
    std::vector<bool> alive(nb, false);
    if (lg == ModalLogic::GL) {
        std::vector<std::uint32_t> order(nb);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [](std::uint32_t x, std::uint32_t y) { return popcount_less(y, x); });
        for (std::uint32_t S : order) {
            bool ok = true;
            for (std::size_t i = 0; i < ts.b && ok; ++i) {
                if (S >> i & 1) continue;
                bool found = false;
                for (const auto& [T, g] : prof)
                    if (alive[T] && wit(S, i, T, g)) {
                        found = true;
                        break;
                    }
                ok = found;
            }
            alive[S] = ok;
        }
        return alive;
    }
    std::fill(alive.begin(), alive.end(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t S = 0; S < nb; ++S) {
            if (!alive[S]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < ts.b && ok; ++i) {
                if (S >> i & 1) continue;
                bool found = false;
                for (const auto& [T, g] : prof)
                    if (alive[T] && wit(S, i, T, g)) {
                        found = true;
                        break;
                    }
                ok = found;
            }
            if (!ok) {
                alive[S] = false;
                changed = true;
            }
        }
    }
    return alive;
}

KripkeModel build_from_types(const std::vector<std::uint32_t>& types, const std::vector<std::pair<int, int>>& edges,
                             const TypeSpace& ts) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < types.size(); ++i) names.push_back("w" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [x, y] : edges) es.emplace_back(names[x], names[y]);
    Valuation val(types.size());
    for (std::size_t i = 0; i < types.size(); ++i)
        for (std::size_t j = 0; j < ts.a; ++j)
            if (types[i] >> j & 1) val[i].insert(ts.atoms[j]);
    return KripkeModel(Frame(names, es), val);
}

KripkeModel countermodel_graph(ModalLogic lg, const TypeSpace& ts, const TypeTables& tt,
                               const std::vector<bool>& alive, std::uint32_t root) {
    std::vector<std::uint32_t> worlds{root};
    std::map<std::uint32_t, int> where{{root, 0}};
    for (std::size_t qi = 0; qi < worlds.size(); ++qi) {
        std::uint32_t t = worlds[qi];
        std::uint32_t S = ts.boxset(t);
        for (std::size_t i = 0; i < ts.b; ++i) {
            if (S >> i & 1) continue;
            bool covered = false;
            for (std::uint32_t w : worlds)
                if (alive[ts.boxset(w)] && witness_ok(lg, ts, tt, S, i, w) && successor_ok(lg, ts, tt, t, w)) {
                    covered = true;
                    break;
                }
            if (covered) continue;
            for (std::uint32_t s = 0; s < ts.ntypes(); ++s)
                if (alive[ts.boxset(s)] && witness_ok(lg, ts, tt, S, i, s)) {
                    where.emplace(s, static_cast<int>(worlds.size()));
                    worlds.push_back(s);
                    break;
                }
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t x = 0; x < worlds.size(); ++x)
        for (std::size_t y = 0; y < worlds.size(); ++y)
            if (successor_ok(lg, ts, tt, worlds[x], worlds[y])) edges.emplace_back(int(x), int(y));
    return build_from_types(worlds, edges, ts);
}

// Tree unfolding for GL: each node gets witnesses for its false boxes, then the relation is closed.
KripkeModel countermodel_gl_tree(const TypeSpace& ts, const TypeTables& tt, const std::vector<bool>& alive,
                                 std::uint32_t root) {
    std::vector<std::uint32_t> nodes;
    std::vector<int> parent;
    std::function<void(std::uint32_t, int)> grow = [&](std::uint32_t t, int par) {
        int me = static_cast<int>(nodes.size());
        nodes.push_back(t);
        parent.push_back(par);
        if (nodes.size() > 5000) throw std::runtime_error("GL countermodel tree too large");
        std::uint32_t S = ts.boxset(t);
        std::vector<std::size_t> pending;
        for (std::size_t i = 0; i < ts.b; ++i)
            if (!(S >> i & 1)) pending.push_back(i);
        while (!pending.empty()) {
            std::uint32_t best = 0;
            std::size_t best_cover = 0;
            for (std::uint32_t s = 0; s < ts.ntypes(); ++s) {
                if (!alive[ts.boxset(s)] || !witness_ok(ModalLogic::GL, ts, tt, S, pending[0], s)) continue;
                std::size_t cover = 0;
                for (std::size_t i : pending)
                    if (witness_ok(ModalLogic::GL, ts, tt, S, i, s)) ++cover;
                if (cover > best_cover) {
                    best_cover = cover;
                    best = s;
                }
            }
            if (best_cover == 0) throw std::logic_error("GL witness missing for a realizable type");
            std::vector<std::size_t> rest;
            for (std::size_t i : pending)
                if (!witness_ok(ModalLogic::GL, ts, tt, S, i, best)) rest.push_back(i);
            pending = rest;
            grow(best, me);
        }
    };
    grow(root, -1);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t x = 0; x < nodes.size(); ++x)
        for (int p = parent[x]; p >= 0; p = parent[p]) edges.emplace_back(p, static_cast<int>(x));
    return build_from_types(nodes, edges, ts);
}

// K only needs witnesses down to the modal depth of the formula.
KripkeModel countermodel_k_tree(const TypeSpace& ts, const TypeTables& tt, const std::vector<bool>& alive,
                                std::uint32_t root, int depth) {
    std::vector<std::uint32_t> nodes;
    std::vector<std::pair<int, int>> edges;
    std::function<void(std::uint32_t, int)> grow = [&](std::uint32_t t, int d) {
        int me = static_cast<int>(nodes.size());
        nodes.push_back(t);
        if (nodes.size() > 5000) throw std::runtime_error("K countermodel tree too large");
        if (d == 0) return;
        std::uint32_t S = ts.boxset(t);
        for (std::size_t i = 0; i < ts.b; ++i) {
            if (S >> i & 1) continue;
            for (std::uint32_t s = 0; s < ts.ntypes(); ++s)
                if (alive[ts.boxset(s)] && witness_ok(ModalLogic::K, ts, tt, S, i, s)) {
                    edges.emplace_back(me, static_cast<int>(nodes.size()));
                    grow(s, d - 1);
                    break;
                }
        }
    };
    grow(root, depth);
    return build_from_types(nodes, edges, ts);
}

bool frame_in_class(ModalLogic lg, const Frame& f) {
    FrameReport r = check_frame(f);
    switch (lg) {
    case ModalLogic::K: return true;
    case ModalLogic::K4: return r.transitive.holds;
    case ModalLogic::S4: return r.transitive.holds && r.reflexive.holds;
    case ModalLogic::GL: return r.transitive.holds && r.converse_well_founded.holds;
    }
    return false;
}

}  // namespace

DecisionVerdict decide(ModalLogic lg, const Formula& a) {
    if (a.lang() != Lang::Box) throw std::invalid_argument("K, K4, S4 and GL decide L_box formulas");
    TypeSpace ts(a);
    TypeTables tt = tabulate(ts, a);
    std::vector<bool> alive = solve(lg, ts, tt);
    DecisionVerdict v;
    for (std::uint32_t t = 0; t < ts.ntypes(); ++t) {
        if (tt.a_true[t] || !alive[ts.boxset(t)] || !type_allowed(lg, ts, tt, t)) continue;
        KripkeModel m = lg == ModalLogic::GL   ? countermodel_gl_tree(ts, tt, alive, t)
                        : lg == ModalLogic::K ? countermodel_k_tree(ts, tt, alive, t, a.modal_depth())
                                               : countermodel_graph(lg, ts, tt, alive, t);
        if (forces(m, 0, a) || !frame_in_class(lg, m.frame))
            throw std::logic_error("countermodel failed verification for " + print(a));
        v.status = Status::NonTheorem;
        v.countermodel = std::move(m);
        v.world = 0;
        return v;
    }
    return v;
}

DecisionVerdict decide_k(const Formula& a) { return decide(ModalLogic::K, a); }
DecisionVerdict decide_k4(const Formula& a) { return decide(ModalLogic::K4, a); }
DecisionVerdict decide_s4(const Formula& a) { return decide(ModalLogic::S4, a); }
DecisionVerdict decide_gl(const Formula& a) { return decide(ModalLogic::GL, a); }

bool gl_consequence(const std::vector<Formula>& gamma, const Formula& a) {
    Formula g = Formula::conj_all(gamma, Lang::Box);
    return decide_gl(Formula::imp(g, a)).status == Status::Theorem;
}

FinfalsResult finfals_check(const Formula& a, int kmax) {
    if (kmax < 1) throw std::invalid_argument("kmax must be at least 1");
    FinfalsResult r;
    bool thm = decide_gl(a).status == Status::Theorem;
    for (int k = 0; k <= kmax; ++k) {
        bool tk = decide_gl(Formula::imp(Formula::box_power(k, Formula::bot()), a)).status == Status::Theorem;
        if (!tk && !r.least_failing_k) r.least_failing_k = k;
        if (thm && !tk) r.agrees = false;
    }
    if (!thm && !r.least_failing_k) r.agrees = false;
    return r;
}

// ---------------------------------------------------------------- enumeration

namespace {

std::string tree_code(const std::vector<int>& parent, int v) {
    std::vector<std::string> kids;
    for (std::size_t c = 0; c < parent.size(); ++c)
        if (parent[c] == v) kids.push_back(tree_code(parent, static_cast<int>(c)));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

std::vector<std::vector<int>> rooted_tree_shapes(int max_nodes) {
    std::vector<std::vector<int>> out;
    std::set<std::string> seen;
    for (int n = 1; n <= max_nodes; ++n) {
        std::vector<int> parent(n, -1);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                std::string c = tree_code(parent, 0);
                if (seen.insert(c).second) out.push_back(parent);
                return;
            }
            for (int p = 0; p < i; ++p) {
                parent[i] = p;
                rec(i + 1);
            }
        };
        rec(1);
    }
    return out;
}

std::vector<std::string> world_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
    return names;
}

}  // namespace

std::vector<Frame> plain_trees(int max_nodes) {
    std::vector<Frame> out;
    for (const auto& parent : rooted_tree_shapes(max_nodes)) {
        auto names = world_names(parent.size());
        std::vector<std::pair<std::string, std::string>> es;
        for (std::size_t i = 1; i < parent.size(); ++i) es.emplace_back(names[parent[i]], names[i]);
        out.emplace_back(names, es);
    }
    return out;
}

std::vector<Frame> transitive_trees(int max_nodes) {
    std::vector<Frame> out;
    for (const auto& parent : rooted_tree_shapes(max_nodes)) {
        auto names = world_names(parent.size());
        std::vector<std::pair<std::string, std::string>> es;
        for (std::size_t i = 1; i < parent.size(); ++i)
            for (int p = parent[i]; p >= 0; p = parent[p]) es.emplace_back(names[p], names[i]);
        out.emplace_back(names, es);
    }
    return out;
}

std::vector<Valuation> all_valuations(std::size_t n, const std::vector<std::string>& atoms) {
    std::size_t bits = n * atoms.size();
    if (bits > 20) throw std::runtime_error("too many valuations to enumerate");
    std::vector<Valuation> out;
    for (std::size_t m = 0; m < (std::size_t(1) << bits); ++m) {
        Valuation v(n);
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t j = 0; j < atoms.size(); ++j)
                if (m >> (w * atoms.size() + j) & 1) v[w].insert(atoms[j]);
        out.push_back(v);
    }
    return out;
}

std::vector<VeltmanModel> veltman_frames(int n) {
    std::vector<VeltmanModel> out;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    std::set<std::vector<bool>> seen;
    std::vector<int> perm(n);
    auto names = world_names(n);
    for (std::size_t m = 0; m < (std::size_t(1) << pairs.size()); ++m) {
        std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (m >> e & 1) r[pairs[e].first][pairs[e].second] = true;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n && ok; ++c)
                    if (r[a][b] && r[b][c] && !r[a][c]) ok = false;
        for (int a = 0; a < n && ok; ++a)
            if (r[a][a]) ok = false;
        if (!ok) continue;
        std::vector<std::pair<std::string, std::string>> es;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (r[a][b]) es.emplace_back(names[a], names[b]);
        Frame f(names, es);
        auto base = VeltmanModel::minimal_preorders(f);
        // optional extra pairs per world
        std::vector<std::vector<std::pair<int, int>>> extra(n);
        for (int w = 0; w < n; ++w)
            for (int u : f.succ(w))
                for (int v : f.succ(w))
                    if (u != v && !base[w][u][v]) extra[w].emplace_back(u, v);
        std::vector<std::vector<std::vector<std::vector<bool>>>> choices(n);
        for (int w = 0; w < n; ++w) {
            for (std::size_t mm = 0; mm < (std::size_t(1) << extra[w].size()); ++mm) {
                auto le = base[w];
                for (std::size_t e = 0; e < extra[w].size(); ++e)
                    if (mm >> e & 1) le[extra[w][e].first][extra[w][e].second] = true;
                bool good = true;
                for (int a = 0; a < n && good; ++a)
                    for (int b = 0; b < n && good; ++b) {
                        if (!le[a][b]) continue;
                        for (int c = 0; c < n && good; ++c) {
                            if (le[b][c] && !le[a][c]) good = false;
                            if (f.rel(b, c) && !f.rel(a, c)) good = false;
                        }
                    }
                if (good) choices[w].push_back(le);
            }
        }
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            std::vector<std::vector<std::vector<bool>>> le(n);
            for (int w = 0; w < n; ++w) le[w] = choices[w][pick[w]];
            std::vector<bool> best;
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<bool> code;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) code.push_back(r[perm[a]][perm[b]]);
                for (int w = 0; w < n; ++w)
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b) code.push_back(le[perm[w]][perm[a]][perm[b]]);
                if (best.empty() || code < best) best = code;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(best).second) {
                KripkeModel k(f, Valuation(n));
                out.emplace_back(k, le);
            }
            int w = 0;
            while (w < n && ++pick[w] == choices[w].size()) pick[w++] = 0;
            if (w == n) break;
        }
    }
    return out;
}

DecisionVerdict decide_ilm(const Formula& a, int size_bound) {
    if (a.lang() != Lang::Rhd) throw std::invalid_argument("decide_ilm needs an L_rhd formula");
    if (size_bound < 1) throw std::invalid_argument("size bound must be at least 1");
    std::vector<std::string> atoms;
    for (const auto& p : atoms_of(a)) atoms.push_back(p);
    DecisionVerdict v;
    v.bound = size_bound;
    for (int n = 1; n <= size_bound; ++n) {
        for (const auto& fr : veltman_frames(n)) {
            for (const auto& val : all_valuations(n, atoms)) {
                VeltmanModel m(KripkeModel(fr.base.frame, val), fr.le);
                auto t = veltman_truth_set(m, a);
                for (int w = 0; w < n; ++w) {
                    if (t[w]) continue;
                    if (veltman_forces_symmetric(m, w, a)) throw std::logic_error("Veltman clauses disagree");
                    v.status = Status::NonTheorem;
                    v.veltman_countermodel = m;
                    v.world = w;
                    return v;
                }
            }
        }
    }
    v.status = Status::NonTheoremUpToBoundUnknown;
    return v;
}

// ---------------------------------------------------------------- representatives

namespace {

struct TypeTree {
    std::set<std::string> val;
    std::vector<int> succ;  // indices of successor types
};

Formula literal_conj(const std::set<std::string>& val, const std::vector<std::string>& atoms, Lang l) {
    std::vector<Formula> lits;
    for (const auto& p : atoms) {
        Formula ap = Formula::atom(p, l);
        lits.push_back(val.count(p) ? ap : Formula::neg(ap));
    }
    return Formula::conj_all(lits, l);
}

RepresentativeSet build_reps(const std::string& logic, int n, const std::vector<std::string>& atoms_in, Lang l) {
    std::vector<std::string> atoms = atoms_in;
    std::sort(atoms.begin(), atoms.end());
    RepresentativeSet rs;
    rs.logic = logic;
    rs.n = n;
    rs.atoms = atoms;
    std::vector<std::set<std::string>> vals;
    for (std::size_t m = 0; m < (std::size_t(1) << atoms.size()); ++m) {
        std::set<std::string> v;
        for (std::size_t j = 0; j < atoms.size(); ++j)
            if (m >> j & 1) v.insert(atoms[j]);
        vals.push_back(v);
    }
    // types of height < n, each with a transitively closed successor set
    std::vector<TypeTree> types;
    std::vector<int> level_start;
    for (int h = 0; h < n; ++h) {
        std::size_t prev = types.size();
        if (h == 0) {
            for (const auto& v : vals) types.push_back({v, {}});
            continue;
        }
        // closed subsets of all earlier types that include at least one type of height h-1
        std::size_t m = prev;
        if (m > 20) throw EnvelopeError("representative set too large to enumerate");
        std::size_t lo = level_start.empty() ? 0 : level_start.back();
        for (std::size_t s = 1; s < (std::size_t(1) << m); ++s) {
            bool closed = true, top_level = false;
            for (std::size_t i = 0; i < m && closed; ++i) {
                if (!(s >> i & 1)) continue;
                if (i >= lo) top_level = true;
                for (int j : types[i].succ)
                    if (!(s >> j & 1)) closed = false;
            }
            if (!closed || !top_level) continue;
            std::vector<int> succ;
            for (std::size_t i = 0; i < m; ++i)
                if (s >> i & 1) succ.push_back(static_cast<int>(i));
            for (const auto& v : vals) types.push_back({v, succ});
        }
        level_start.push_back(static_cast<int>(prev));
        (void)prev;
    }
    if (types.size() > 16) throw EnvelopeError("representative set has more than 2^16 classes");
    std::vector<Formula> chi(types.size());
    for (std::size_t i = 0; i < types.size(); ++i) {
        std::vector<Formula> parts{literal_conj(types[i].val, atoms, l)};
        std::vector<Formula> kids;
        for (int j : types[i].succ) {
            parts.push_back(Formula::ldia(chi[j]));
            kids.push_back(chi[j]);
        }
        parts.push_back(Formula::lbox(Formula::disj_all(kids, l)));
        chi[i] = Formula::conj_all(parts, l);
    }
    rs.types = chi;
    std::size_t nt = types.size();
    for (std::size_t s = 0; s < (std::size_t(1) << nt); ++s) {
        std::vector<Formula> ds;
        std::vector<int> ids;
        for (std::size_t i = 0; i < nt; ++i)
            if (s >> i & 1) {
                ds.push_back(chi[i]);
                ids.push_back(static_cast<int>(i));
            }
        rs.members.push_back(Formula::disj_all(ds, l));
        rs.member_types.push_back(ids);
    }
    return rs;
}

}  // namespace

RepresentativeSet representatives_gl(int n, const std::vector<std::string>& atoms) {
    if (n < 0 || n > 2 || atoms.size() > 2) throw EnvelopeError("representatives_gl needs n <= 2 and at most 2 atoms");
    RepresentativeSet rs = build_reps("gl_n", n, atoms, Lang::Box);
    Formula hyp = Formula::box_power(n, Formula::bot());
    // types are satisfiable and mutually exclusive under []^n bot, so distinct unions are inequivalent
    for (std::size_t i = 0; i < rs.types.size(); ++i) {
        if (decide_gl(Formula::imp(hyp, Formula::neg(rs.types[i]))).status == Status::Theorem)
            throw std::logic_error("unsatisfiable type in representative set");
        for (std::size_t j = i + 1; j < rs.types.size(); ++j)
            if (decide_gl(Formula::imp(hyp, Formula::neg(Formula::conj(rs.types[i], rs.types[j])))).status !=
                Status::Theorem)
                throw std::logic_error("overlapping types in representative set");
    }
    return rs;
}

RepresentativeSet representatives_ilm(int n, const std::vector<std::string>& atoms) {
    if (n < 0 || n > 1 || atoms.size() > 1) throw EnvelopeError("representatives_ilm needs n <= 1 and at most 1 atom");
    RepresentativeSet rs = build_reps("ilm_n", n, atoms, Lang::Rhd);
    Formula hyp = Formula::box_power(n, Formula::bot(Lang::Rhd));
    for (std::size_t i = 0; i < rs.members.size(); ++i)
        for (std::size_t j = i + 1; j < rs.members.size(); ++j) {
            Formula eq = Formula::imp(hyp, Formula::iff(rs.members[i], rs.members[j]));
            if (decide_ilm(eq, 2).status != Status::NonTheorem)
                throw std::logic_error("representatives not separated by a countermodel");
        }
    return rs;
}

}  // namespace provmod
