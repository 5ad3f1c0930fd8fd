#pragma once

// Reference implementations used to cross-check the library. They only read the formula tree;
// evaluation, entailment and model search are written from scratch here.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "provmod/formula.hpp"

namespace oracle {

using provmod::Formula;
using provmod::Kind;
using provmod::Lang;

// Opaque atoms: propositional atoms plus outermost modal subformulas, keyed by node.
inline void opaque(const Formula& f, std::vector<Formula>& out) {
    switch (f.kind()) {
    case Kind::Bot: return;
    case Kind::Imp:
        opaque(f.left(), out);
        opaque(f.right(), out);
        return;
    default:
        for (const auto& g : out)
            if (g.node() == f.node()) return;
        out.push_back(f);
    }
}

inline bool tt_eval(const Formula& f, const std::vector<Formula>& keys, std::uint32_t row) {
    switch (f.kind()) {
    case Kind::Bot: return false;
    case Kind::Imp: return !tt_eval(f.left(), keys, row) || tt_eval(f.right(), keys, row);
    default:
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (keys[i].node() == f.node()) return (row >> i) & 1;
        throw std::logic_error("unkeyed subformula");
    }
}

inline bool entails(const std::vector<Formula>& gamma, const Formula& a) {
    std::vector<Formula> keys;
    for (const auto& g : gamma) opaque(g, keys);
    opaque(a, keys);
    if (keys.size() > 22) throw std::runtime_error("too many opaque atoms for the oracle");
    for (std::uint32_t row = 0; row < (1u << keys.size()); ++row) {
        bool ok = true;
        for (const auto& g : gamma)
            if (!tt_eval(g, keys, row)) {
                ok = false;
                break;
            }
        if (ok && !tt_eval(a, keys, row)) return false;
    }
    return true;
}

inline bool valid(const Formula& a) { return entails({}, a); }

inline bool purely_modal(const Formula& f, bool under = false) {
    switch (f.kind()) {
    case Kind::Atom: return under;
    case Kind::Bot: return true;
    case Kind::Imp: return purely_modal(f.left(), under) && purely_modal(f.right(), under);
    case Kind::Box:
    case Kind::BoxN: return purely_modal(f.sub(), true);
    case Kind::Rhd: return purely_modal(f.left(), true) && purely_modal(f.right(), true);
    }
    return false;
}

// Finite Kripke model on worlds 0..n-1 with successor bitmasks.
struct Model {
    int n = 0;
    std::vector<std::uint32_t> succ;
    std::map<std::string, std::uint32_t> val;
};

inline bool holds(const Model& m, int w, const Formula& f) {
    switch (f.kind()) {
    case Kind::Bot: return false;
    case Kind::Atom: {
        auto it = m.val.find(f.name());
        return it != m.val.end() && ((it->second >> w) & 1);
    }
    case Kind::Imp: return !holds(m, w, f.left()) || holds(m, w, f.right());
    case Kind::Box:
        for (int u = 0; u < m.n; ++u)
            if (((m.succ[w] >> u) & 1) && !holds(m, u, f.sub())) return false;
        return true;
    default: throw std::logic_error("oracle evaluates L_box only");
    }
}

// All parent arrays of rooted trees on n nodes with parent[i] < i (labelled, root 0).
inline std::vector<std::vector<int>> parent_arrays(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, -1);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int p = 0; p < i; ++p) {
            cur[i] = p;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

inline Model tree_model(const std::vector<int>& parent, bool transitive) {
    Model m;
    m.n = static_cast<int>(parent.size());
    m.succ.assign(m.n, 0);
    for (int i = 1; i < m.n; ++i) {
        if (transitive)
            for (int a = parent[i]; a >= 0; a = parent[a]) m.succ[a] |= 1u << i;
        else
            m.succ[parent[i]] |= 1u << i;
    }
    return m;
}

inline std::vector<std::string> atoms(const Formula& f) {
    std::vector<std::string> out;
    std::function<void(const Formula&)> go = [&](const Formula& g) {
        switch (g.kind()) {
        case Kind::Atom:
            if (std::find(out.begin(), out.end(), g.name()) == out.end()) out.push_back(g.name());
            return;
        case Kind::Bot: return;
        case Kind::Imp:
        case Kind::Rhd:
            go(g.left());
            go(g.right());
            return;
        default: go(g.sub());
        }
    };
    go(f);
    return out;
}

// Searches irreflexive transitive trees with at most max_nodes nodes for a refutation.
inline bool gl_refutable_small(const Formula& f, int max_nodes) {
    auto as = atoms(f);
    for (int n = 1; n <= max_nodes; ++n)
        for (const auto& par : parent_arrays(n)) {
            Model m = tree_model(par, true);
            std::uint64_t combos = 1ull << (n * as.size());
            for (std::uint64_t v = 0; v < combos; ++v) {
                for (std::size_t j = 0; j < as.size(); ++j)
                    m.val[as[j]] = static_cast<std::uint32_t>((v >> (j * n)) & ((1u << n) - 1));
                for (int w = 0; w < n; ++w)
                    if (!holds(m, w, f)) return true;
            }
        }
    return false;
}

// Random formula of modal depth at most depth; purely modal when asked.
inline Formula random_formula(std::mt19937& rng, const std::vector<std::string>& as, int depth, Lang lang,
                              bool pure = false, int size = 6) {
    auto pick = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };
    std::function<Formula(int, int, bool)> gen = [&](int d, int s, bool under) -> Formula {
        int choice = s <= 1 ? pick(2) : pick(7);
        if (choice >= 2 && choice <= 4 && s > 1) {
            int ls = 1 + pick(s - 1);
            Formula l = gen(d, ls, under), r = gen(d, s - ls, under);
            if (choice == 2) return Formula::imp(l, r);
            if (choice == 3) return Formula::conj(l, r);
            return Formula::disj(l, r);
        }
        if (choice == 5 && s > 1) return Formula::neg(gen(d, s - 1, under));
        if (choice == 6 && d > 0) {
            if (lang == Lang::Rhd && pick(2)) {
                int ls = 1 + pick(std::max(1, s - 1));
                return Formula::rhd(gen(d - 1, ls, true), gen(d - 1, std::max(1, s - ls), true));
            }
            if (lang == Lang::Omega) return Formula::boxn(pick(2), gen(d - 1, s - 1, true));
            return Formula::lbox(gen(d - 1, std::max(1, s - 1), true));
        }
        if ((pure && !under) || pick(5) == 0) {
            if (d > 0 && !(pure && !under && pick(4) == 0)) {
                Formula x = gen(d - 1, 1, true);
                if (lang == Lang::Omega) return Formula::boxn(pick(2), x);
                if (lang == Lang::Rhd && pick(2)) return Formula::rhd(x, gen(d - 1, 1, true));
                return Formula::lbox(x);
            }
            return pick(3) ? Formula::bot(lang) : Formula::top(lang);
        }
        return Formula::atom(as[pick(static_cast<int>(as.size()))], lang);
    };
    return gen(depth, 1 + pick(size), false);
}

}  // namespace oracle
