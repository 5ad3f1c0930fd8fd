#include "provmod/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_map>

namespace provmod {

const char* lang_name(Lang l) {
    switch (l) {
    case Lang::Box: return "box";
    case Lang::Rhd: return "rhd";
    case Lang::Omega: return "omega";
    }
    return "?";
}

Lang lang_from_name(const std::string& s) {
    if (s == "box") return Lang::Box;
    if (s == "rhd") return Lang::Rhd;
    if (s == "omega") return Lang::Omega;
    throw std::invalid_argument("unknown language tag: " + s);
}

namespace {

struct Key {
    Kind kind;
    int index;
    std::string name;
    const Node* a;
    const Node* b;
    bool operator==(const Key& o) const {
        return kind == o.kind && index == o.index && name == o.name && a == o.a && b == o.b;
    }
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::size_t h = std::hash<std::string>()(k.name);
        h ^= std::hash<const void*>()(k.a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<const void*>()(k.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::size_t>(k.kind) * 31 + static_cast<std::size_t>(k.index) * 1000003;
        return h;
    }
};

struct Store {
    std::mutex mu;
    std::unordered_map<Key, Node*, KeyHash> table;
    std::vector<std::unique_ptr<Node>> nodes;
};

Store& store() {
    static Store* s = new Store();
    return *s;
}

const Node* intern(Kind kind, int index, const std::string& name, const Node* a, const Node* b) {
    Store& s = store();
    Key k{kind, index, name, a, b};
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.table.find(k);
    if (it != s.table.end()) return it->second;
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->index = index;
    n->name = name;
    n->a = a;
    n->b = b;
    n->id = s.nodes.size();
    n->size = 1 + (a ? a->size : 0) + (b ? b->size : 0);
    int da = a ? a->modal_depth : 0;
    int db = b ? b->modal_depth : 0;
    bool modal = kind == Kind::Box || kind == Kind::Rhd || kind == Kind::BoxN;
    n->modal_depth = std::max(da, db) + (modal ? 1 : 0);
    Node* raw = n.get();
    s.nodes.push_back(std::move(n));
    s.table.emplace(k, raw);
    return raw;
}

bool legal_in(const Node* n, Lang l) {
    switch (n->kind) {
    case Kind::Box: return l == Lang::Box;
    case Kind::Rhd: return l == Lang::Rhd;
    case Kind::BoxN: return l == Lang::Omega;
    default: return true;
    }
}

bool tree_legal(const Node* n, Lang l, std::unordered_map<const Node*, bool>& seen) {
    auto it = seen.find(n);
    if (it != seen.end()) return it->second;
    bool ok = legal_in(n, l) && (!n->a || tree_legal(n->a, l, seen)) && (!n->b || tree_legal(n->b, l, seen));
    seen[n] = ok;
    return ok;
}

void same_lang(const Formula& a, const Formula& b) {
    if (a.lang() != b.lang()) throw std::invalid_argument("mixed languages in one formula");
}

bool valid_atom_name(const std::string& s) {
    if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
    for (char c : s)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
    return s != "bot" && s != "top";
}

}  // namespace

Formula Formula::atom(const std::string& name, Lang l) {
    if (!valid_atom_name(name)) throw std::invalid_argument("bad atom name: " + name);
    return Formula(intern(Kind::Atom, 0, name, nullptr, nullptr), l);
}

Formula Formula::bot(Lang l) { return Formula(intern(Kind::Bot, 0, "", nullptr, nullptr), l); }

Formula Formula::top(Lang l) { return imp(bot(l), bot(l)); }

Formula Formula::imp(const Formula& a, const Formula& b) {
    same_lang(a, b);
    return Formula(intern(Kind::Imp, 0, "", a.n_, b.n_), a.lang_);
}

Formula Formula::box(const Formula& a) {
    if (a.lang_ != Lang::Box) throw std::invalid_argument("[] is only legal in L_box");
    return Formula(intern(Kind::Box, 0, "", a.n_, nullptr), a.lang_);
}

Formula Formula::rhd(const Formula& a, const Formula& b) {
    same_lang(a, b);
    if (a.lang_ != Lang::Rhd) throw std::invalid_argument("|> is only legal in L_rhd");
    return Formula(intern(Kind::Rhd, 0, "", a.n_, b.n_), a.lang_);
}

Formula Formula::boxn(int n, const Formula& a) {
    if (a.lang_ != Lang::Omega) throw std::invalid_argument("[n] is only legal in L_omega");
    if (n < 0) throw std::invalid_argument("negative modality index");
    return Formula(intern(Kind::BoxN, n, "", a.n_, nullptr), a.lang_);
}

Formula Formula::neg(const Formula& a) { return imp(a, bot(a.lang_)); }
Formula Formula::disj(const Formula& a, const Formula& b) { return imp(neg(a), b); }
Formula Formula::conj(const Formula& a, const Formula& b) { return neg(disj(neg(a), neg(b))); }
Formula Formula::iff(const Formula& a, const Formula& b) { return conj(imp(a, b), imp(b, a)); }

Formula Formula::dia(const Formula& a) { return neg(lbox(neg(a))); }

Formula Formula::boxdot(const Formula& a) { return conj(a, lbox(a)); }

Formula Formula::lbox(const Formula& a) {
    switch (a.lang_) {
    case Lang::Box: return box(a);
    case Lang::Rhd: return rhd(neg(a), bot(Lang::Rhd));
    case Lang::Omega: break;
    }
    throw std::invalid_argument("L_omega has no unindexed box");
}

Formula Formula::ldia(const Formula& a) { return neg(lbox(neg(a))); }

Formula Formula::box_power(int n, const Formula& a) {
    Formula r = a;
    for (int i = 0; i < n; ++i) r = lbox(r);
    return r;
}

Formula Formula::conj_all(const std::vector<Formula>& xs, Lang l) {
    if (xs.empty()) return top(l);
    Formula r = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) r = conj(r, xs[i]);
    return r;
}

Formula Formula::disj_all(const std::vector<Formula>& xs, Lang l) {
    if (xs.empty()) return bot(l);
    Formula r = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) r = disj(r, xs[i]);
    return r;
}

bool Formula::is_top() const {
    return n_->kind == Kind::Imp && n_->a->kind == Kind::Bot && n_->b->kind == Kind::Bot;
}

Formula Formula::with_lang(Lang l) const {
    std::unordered_map<const Node*, bool> seen;
    if (!tree_legal(n_, l, seen))
        throw std::invalid_argument(std::string("formula not legal in L_") + lang_name(l));
    return Formula(n_, l);
}

std::string Formula::str() const { return print(*this); }

// ---------------------------------------------------------------- printing

namespace {

enum Level { L_IMP = 1, L_RHD = 2, L_OR = 3, L_AND = 4, L_UN = 5 };

const Node* neg_body(const Node* n) {
    if (n->kind == Kind::Imp && n->b->kind == Kind::Bot) return n->a;
    return nullptr;
}

// A & B is stored as ~(~~A -> ~B)
bool match_conj(const Node* n, const Node*& a, const Node*& b) {
    const Node* x = neg_body(n);
    if (!x || x->kind != Kind::Imp) return false;
    const Node* nna = neg_body(x->a);
    if (!nna) return false;
    const Node* na = neg_body(nna);
    const Node* nb = neg_body(x->b);
    if (!na || !nb) return false;
    a = na;
    b = nb;
    return true;
}

struct Printer {
    Lang lang;

    std::string wrap(const std::string& s, int own, int need) { return own < need ? "(" + s + ")" : s; }

    std::string go(const Node* n, int need) {
        switch (n->kind) {
        case Kind::Atom: return n->name;
        case Kind::Bot: return "bot";
        case Kind::Box: return wrap("[]" + go(n->a, L_UN), L_UN, need);
        case Kind::BoxN: return wrap("[" + std::to_string(n->index) + "]" + go(n->a, L_UN), L_UN, need);
        case Kind::Rhd: return wrap(go(n->a, L_OR) + " |> " + go(n->b, L_OR), L_RHD, need);
        case Kind::Imp: break;
        }
        if (n->a->kind == Kind::Bot && n->b->kind == Kind::Bot) return "top";
        if (n->b->kind == Kind::Bot) {
            const Node* a;
            const Node* b;
            if (match_conj(n, a, b)) return wrap(go(a, L_AND) + " & " + go(b, L_UN), L_AND, need);
            const Node* x = n->a;
            if (lang == Lang::Box && x->kind == Kind::Box) {
                const Node* inner = neg_body(x->a);
                if (inner) return wrap("<>" + go(inner, L_UN), L_UN, need);
            }
            return wrap("~" + go(x, L_UN), L_UN, need);
        }
        const Node* na = neg_body(n->a);
        if (na && na->kind != Kind::Bot) return wrap(go(na, L_OR) + " | " + go(n->b, L_AND), L_OR, need);
        return wrap(go(n->a, L_RHD) + " -> " + go(n->b, L_IMP), L_IMP, need);
    }
};

struct PrintCache {
    std::mutex mu;
    std::unordered_map<std::size_t, std::string> m[3];
};

PrintCache& print_cache() {
    static PrintCache* c = new PrintCache();
    return *c;
}

}  // namespace

std::string print(const Formula& f) {
    PrintCache& c = print_cache();
    int li = static_cast<int>(f.lang());
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.m[li].find(f.id());
        if (it != c.m[li].end()) return it->second;
    }
    Printer p{f.lang()};
    std::string s = p.go(f.node(), 0);
    std::lock_guard<std::mutex> lock(c.mu);
    c.m[li].emplace(f.id(), s);
    return s;
}

bool FormulaOrder::operator()(const Formula& x, const Formula& y) const {
    auto rank = [](const Formula& f) { return f.kind() == Kind::Atom ? 0 : (f.is_modal() ? 1 : 2); };
    int rx = rank(x), ry = rank(y);
    if (rx != ry) return rx < ry;
    if (rx == 0) return x.name() < y.name();
    if (x == y) return false;
    return print(x) < print(y);
}

// ---------------------------------------------------------------- parsing

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error("parse error at " + std::to_string(pos) + ": " + msg), pos_(pos) {}

namespace {

struct Parser {
    const std::string& s;
    Lang lang;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(const char* t) {
        ws();
        return s.compare(i, std::char_traits<char>::length(t), t) == 0;
    }
    bool eat(const char* t) {
        if (!peek(t)) return false;
        i += std::char_traits<char>::length(t);
        return true;
    }
    [[noreturn]] void fail(const std::string& m) { throw ParseError(m, i); }

    Formula iff_() {
        Formula a = imp_();
        while (eat("<->")) a = Formula::iff(a, imp_());
        return a;
    }
    Formula imp_() {
        Formula a = rhd_();
        if (peek("->")) {
            i += 2;
            return Formula::imp(a, imp_());
        }
        return a;
    }
    Formula rhd_() {
        Formula a = or_();
        if (peek("|>")) {
            std::size_t at = i;
            i += 2;
            if (lang != Lang::Rhd) throw ParseError("operator |> is illegal in this language", at);
            Formula b = or_();
            if (peek("|>")) fail("|> is not associative; use parentheses");
            return Formula::rhd(a, b);
        }
        return a;
    }
    Formula or_() {
        Formula a = and_();
        while (peek("|") && !peek("|>")) {
            ++i;
            a = Formula::disj(a, and_());
        }
        return a;
    }
    Formula and_() {
        Formula a = un_();
        while (eat("&")) a = Formula::conj(a, un_());
        return a;
    }
    Formula un_() {
        ws();
        std::size_t at = i;
        if (eat("~")) return Formula::neg(un_());
        if (eat("[]")) {
            if (lang == Lang::Omega) throw ParseError("operator [] is illegal in this language", at);
            return Formula::lbox(un_());
        }
        if (peek("<>")) {
            i += 2;
            if (lang == Lang::Omega) throw ParseError("operator <> is illegal in this language", at);
            return Formula::ldia(un_());
        }
        if (eat("[")) {
            ws();
            std::size_t st = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (st == i) fail("expected modality index");
            int n = std::stoi(s.substr(st, i - st));
            if (!eat("]")) fail("expected ]");
            if (lang != Lang::Omega) throw ParseError("operator [n] is illegal in this language", at);
            return Formula::boxn(n, un_());
        }
        if (eat("(")) {
            Formula a = iff_();
            if (!eat(")")) fail("expected )");
            return a;
        }
        if (i < s.size() && s[i] >= 'a' && s[i] <= 'z') {
            std::size_t st = i;
            while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= '0' && s[i] <= '9') || s[i] == '_')) ++i;
            std::string w = s.substr(st, i - st);
            if (w == "bot") return Formula::bot(lang);
            if (w == "top") return Formula::top(lang);
            return Formula::atom(w, lang);
        }
        if (i >= s.size()) fail("unexpected end of input");
        fail(std::string("unexpected character '") + s[i] + "'");
    }
};

}  // namespace

Formula parse(const std::string& text, Lang lang) {
    Parser p{text, lang};
    Formula f = p.iff_();
    p.ws();
    if (p.i != text.size()) p.fail("trailing input");
    return f;
}

// ---------------------------------------------------------------- analysis

namespace {

void collect_atoms(const Node* n, std::set<std::string>& out, std::unordered_map<const Node*, bool>& seen) {
    if (seen.count(n)) return;
    seen[n] = true;
    if (n->kind == Kind::Atom) out.insert(n->name);
    if (n->a) collect_atoms(n->a, out, seen);
    if (n->b) collect_atoms(n->b, out, seen);
}

bool bare_atom_free(const Node* n) {
    switch (n->kind) {
    case Kind::Atom: return false;
    case Kind::Bot: return true;
    case Kind::Imp: return bare_atom_free(n->a) && bare_atom_free(n->b);
    default: return true;
    }
}

void collect_opaque(const Formula& f, std::vector<Formula>& out, std::unordered_map<const Node*, bool>& seen) {
    if (seen.count(f.node())) return;
    seen[f.node()] = true;
    switch (f.kind()) {
    case Kind::Bot: return;
    case Kind::Imp:
        collect_opaque(f.left(), out, seen);
        collect_opaque(f.right(), out, seen);
        return;
    default: out.push_back(f);
    }
}

void collect_modal(const Formula& f, std::vector<Formula>& out, std::unordered_map<const Node*, bool>& seen) {
    if (seen.count(f.node())) return;
    seen[f.node()] = true;
    if (f.is_modal()) out.push_back(f);
    if (f.node()->a) collect_modal(Formula::from_node(f.node()->a, f.lang()), out, seen);
    if (f.node()->b) collect_modal(Formula::from_node(f.node()->b, f.lang()), out, seen);
}

}  // namespace

std::set<std::string> atoms_of(const Formula& f) {
    std::set<std::string> out;
    std::unordered_map<const Node*, bool> seen;
    collect_atoms(f.node(), out, seen);
    return out;
}

std::set<std::string> atoms_of(const std::vector<Formula>& fs) {
    std::set<std::string> out;
    std::unordered_map<const Node*, bool> seen;
    for (const auto& f : fs) collect_atoms(f.node(), out, seen);
    return out;
}

bool is_purely_modal(const Formula& f) { return bare_atom_free(f.node()); }

std::vector<Formula> opaque_atoms(const std::vector<Formula>& fs) {
    std::vector<Formula> out;
    std::unordered_map<const Node*, bool> seen;
    for (const auto& f : fs) collect_opaque(f, out, seen);
    std::sort(out.begin(), out.end(), FormulaOrder());
    return out;
}

std::vector<Formula> modal_subformulas(const Formula& f) {
    std::vector<Formula> out;
    std::unordered_map<const Node*, bool> seen;
    collect_modal(f, out, seen);
    std::sort(out.begin(), out.end(), FormulaOrder());
    return out;
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& m) {
    std::unordered_map<const Node*, Formula> memo;
    std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
        auto it = memo.find(g.node());
        if (it != memo.end()) return it->second;
        Formula r;
        switch (g.kind()) {
        case Kind::Atom: {
            auto mi = m.find(g.name());
            r = mi == m.end() ? g : mi->second;
            break;
        }
        case Kind::Bot: r = g; break;
        case Kind::Imp: r = Formula::imp(go(g.left()), go(g.right())); break;
        case Kind::Box: r = Formula::box(go(g.sub())); break;
        case Kind::BoxN: r = Formula::boxn(g.index(), go(g.sub())); break;
        case Kind::Rhd: r = Formula::rhd(go(g.left()), go(g.right())); break;
        }
        memo.emplace(g.node(), r);
        return r;
    };
    return go(f);
}

Skeleton skeleton(const Formula& f) {
    Skeleton sk;
    std::vector<Formula> ops = opaque_atoms({f});
    std::set<std::string> used = atoms_of(f);
    std::map<const Node*, Formula> qmap;
    int next = 0;
    for (const auto& o : ops) {
        if (o.kind() == Kind::Atom) {
            sk.p_atoms.push_back(o.name());
            continue;
        }
        std::string q;
        do {
            q = "q" + std::to_string(next++);
        } while (used.count(q));
        sk.q_atoms.push_back(q);
        sk.bindings.emplace(q, o);
        qmap.emplace(o.node(), Formula::atom(q, f.lang()));
    }
    std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
        switch (g.kind()) {
        case Kind::Imp: return Formula::imp(go(g.left()), go(g.right()));
        case Kind::Atom:
        case Kind::Bot: return g;
        default: return qmap.at(g.node());
        }
    };
    sk.skeleton = go(f);
    return sk;
}

Formula pre_interpolant(const Formula& f) {
    if (f.lang() == Lang::Omega) throw std::invalid_argument("pre-interpolant is defined for L_box and L_rhd");
    Skeleton sk = skeleton(f);
    std::size_t m = sk.p_atoms.size();
    if (m > 20) throw std::runtime_error("too many free atoms for pre-interpolant");
    std::map<std::string, Formula> sub = sk.bindings;
    std::vector<Formula> conjuncts;
    for (std::size_t i = 0; i < (std::size_t(1) << m); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            bool is_bot = (i >> (m - 1 - j)) & 1;
            sub[sk.p_atoms[j]] = is_bot ? Formula::bot(f.lang()) : Formula::top(f.lang());
        }
        conjuncts.push_back(substitute(sk.skeleton, sub));
    }
    return Formula::conj_all(conjuncts, f.lang());
}

// ---------------------------------------------------------------- truth tables

namespace {

// Evaluates formulas over all assignments to k opaque atoms, in chunks of 2^16 rows.
class TruthTable {
public:
    explicit TruthTable(const std::vector<Formula>& fs) : vars_(opaque_atoms(fs)) {
        if (vars_.size() > 30) throw std::runtime_error("classical check over more than 30 opaque atoms");
        for (std::size_t i = 0; i < vars_.size(); ++i) index_.emplace(vars_[i].node(), i);
        std::size_t k = vars_.size();
        chunk_bits_ = std::min<std::size_t>(k, 16);
        words_ = ((std::size_t(1) << chunk_bits_) + 63) / 64;
        chunks_ = std::size_t(1) << (k - chunk_bits_);
    }

    std::size_t chunks() const { return chunks_; }
    std::size_t rows_in_chunk() const { return std::size_t(1) << chunk_bits_; }

    using Bits = std::vector<std::uint64_t>;

    Bits eval(const Formula& f, std::size_t chunk, std::unordered_map<const Node*, Bits>& memo) {
        auto it = memo.find(f.node());
        if (it != memo.end()) return it->second;
        Bits r(words_, 0);
        if (f.kind() == Kind::Bot) {
        } else if (f.kind() == Kind::Imp) {
            Bits a = eval(f.left(), chunk, memo);
            Bits b = eval(f.right(), chunk, memo);
            for (std::size_t w = 0; w < words_; ++w) r[w] = ~a[w] | b[w];
        } else {
            std::size_t v = index_.at(f.node());
            for (std::size_t row = 0; row < rows_in_chunk(); ++row) {
                std::size_t full = (chunk << chunk_bits_) | row;
                if ((full >> v) & 1) r[row / 64] |= std::uint64_t(1) << (row % 64);
            }
        }
        mask(r);
        memo.emplace(f.node(), r);
        return r;
    }

    void mask(Bits& r) const {
        std::size_t rows = rows_in_chunk();
        if (rows % 64) r.back() &= (std::uint64_t(1) << (rows % 64)) - 1;
    }

    const std::vector<Formula>& vars() const { return vars_; }

private:
    std::vector<Formula> vars_;
    std::unordered_map<const Node*, std::size_t> index_;
    std::size_t chunk_bits_ = 0, words_ = 1, chunks_ = 1;
};

}  // namespace

bool classical_entails(const std::vector<Formula>& gamma, const Formula& a) {
    std::vector<Formula> all = gamma;
    all.push_back(a);
    for (const auto& g : gamma) same_lang(g, a);
    TruthTable tt(all);
    for (std::size_t c = 0; c < tt.chunks(); ++c) {
        std::unordered_map<const Node*, TruthTable::Bits> memo;
        TruthTable::Bits acc = tt.eval(a, c, memo);
        for (auto& w : acc) w = ~w;
        tt.mask(acc);
        for (const auto& g : gamma) {
            TruthTable::Bits gb = tt.eval(g, c, memo);
            for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= gb[w];
        }
        for (auto w : acc)
            if (w) return false;
    }
    return true;
}

bool classically_valid(const Formula& a) { return classical_entails({}, a); }

bool classically_equivalent(const Formula& a, const Formula& b) {
    return classical_entails({a}, b) && classical_entails({b}, a);
}

// ---------------------------------------------------------------- phrases

Formula Phrase::as_formula(Lang l) const {
    return Formula::imp(Formula::conj_all(x, l), Formula::disj_all(y, l));
}

std::string Phrase::str() const {
    auto side = [](const std::vector<Formula>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + print(v[i]);
        return s + "}";
    };
    return side(x) + " -> " + side(y);
}

std::vector<Phrase> phrase_cnf(const Formula& a) {
    std::vector<Formula> vars = opaque_atoms({a});
    std::size_t k = vars.size();
    if (k > 16) throw std::runtime_error("phrase_cnf over more than 16 opaque atoms");
    std::unordered_map<const Node*, std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i) idx.emplace(vars[i].node(), i);

    // cubes of the negation: (care mask, value bits)
    using Cube = std::pair<std::uint32_t, std::uint32_t>;
    std::set<Cube> level;
    std::uint32_t full = k == 32 ? ~0u : ((1u << k) - 1);
    for (std::uint32_t row = 0; row < (1u << k); ++row) {
        bool v = eval_classical(a, [&](const Formula& f) { return ((row >> idx.at(f.node())) & 1) != 0; });
        if (!v) level.insert({full, row});
    }
    std::set<Cube> primes;
    while (!level.empty()) {
        std::set<Cube> next;
        std::set<Cube> merged;
        for (auto it = level.begin(); it != level.end(); ++it) {
            for (std::size_t b = 0; b < k; ++b) {
                std::uint32_t bit = 1u << b;
                if (!(it->first & bit) || (it->second & bit)) continue;
                Cube partner{it->first, it->second | bit};
                if (level.count(partner)) {
                    next.insert({it->first & ~bit, it->second & ~bit});
                    merged.insert(*it);
                    merged.insert(partner);
                }
            }
        }
        for (const auto& c : level)
            if (!merged.count(c)) primes.insert(c);
        level = std::move(next);
    }
    std::vector<Phrase> out;
    for (const auto& c : primes) {
        Phrase ph;
        for (std::size_t b = 0; b < k; ++b) {
            if (!(c.first >> b & 1)) continue;
            if (c.second >> b & 1)
                ph.x.push_back(vars[b]);
            else
                ph.y.push_back(vars[b]);
        }
        out.push_back(ph);
    }
    FormulaOrder lt;
    auto vec_less = [&](const std::vector<Formula>& u, const std::vector<Formula>& v) {
        return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(), lt);
    };
    std::sort(out.begin(), out.end(), [&](const Phrase& p, const Phrase& q) {
        if (vec_less(p.x, q.x)) return true;
        if (vec_less(q.x, p.x)) return false;
        return vec_less(p.y, q.y);
    });
    return out;
}

}  // namespace provmod
