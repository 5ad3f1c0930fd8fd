#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace provmod {

enum class Lang { Box, Rhd, Omega };

enum class Kind : std::uint8_t { Atom, Bot, Imp, Box, Rhd, BoxN };

const char* lang_name(Lang l);
Lang lang_from_name(const std::string& s);

// Interned node; structurally equal formulas share one node.
struct Node {
    Kind kind;
    int index;  // BoxN only
    std::string name;  // Atom only
    const Node* a;
    const Node* b;
    std::size_t id;
    std::size_t size;
    int modal_depth;
};

class Formula {
public:
    Formula() = default;

    static Formula atom(const std::string& name, Lang l = Lang::Box);
    static Formula bot(Lang l = Lang::Box);
    static Formula top(Lang l = Lang::Box);
    static Formula imp(const Formula& a, const Formula& b);
    static Formula box(const Formula& a);
    static Formula rhd(const Formula& a, const Formula& b);
    static Formula boxn(int n, const Formula& a);

    // defined connectives, desugared on construction
    static Formula neg(const Formula& a);
    static Formula disj(const Formula& a, const Formula& b);
    static Formula conj(const Formula& a, const Formula& b);
    static Formula iff(const Formula& a, const Formula& b);
    static Formula dia(const Formula& a);
    static Formula boxdot(const Formula& a);
    // conjunction/disjunction of a list, left-folded; empty gives top/bot
    static Formula conj_all(const std::vector<Formula>& xs, Lang l);
    static Formula disj_all(const std::vector<Formula>& xs, Lang l);
    // box in the formula's language: [] for L_box, ~A |> bot for L_rhd
    static Formula lbox(const Formula& a);
    static Formula ldia(const Formula& a);
    static Formula box_power(int n, const Formula& a);

    static Formula from_node(const Node* n, Lang l) { return Formula(n, l); }

    bool valid() const { return n_ != nullptr; }
    const Node* node() const { return n_; }
    Lang lang() const { return lang_; }
    Kind kind() const { return n_->kind; }
    const std::string& name() const { return n_->name; }
    int index() const { return n_->index; }
    Formula left() const { return Formula(n_->a, lang_); }
    Formula right() const { return Formula(n_->b, lang_); }
    Formula sub() const { return Formula(n_->a, lang_); }
    std::size_t id() const { return n_->id; }
    std::size_t size() const { return n_->size; }
    int modal_depth() const { return n_->modal_depth; }

    bool is_modal() const {
        return n_->kind == Kind::Box || n_->kind == Kind::Rhd || n_->kind == Kind::BoxN;
    }
    bool is_bot() const { return n_->kind == Kind::Bot; }
    bool is_top() const;
    Formula with_lang(Lang l) const;

    std::string str() const;

    bool operator==(const Formula& o) const { return n_ == o.n_ && lang_ == o.lang_; }
    bool operator!=(const Formula& o) const { return !(*this == o); }

private:
    Formula(const Node* n, Lang l) : n_(n), lang_(l) {}
    const Node* n_ = nullptr;
    Lang lang_ = Lang::Box;
};

// Fixed total order: atoms lexicographic, then modal formulas by print string.
struct FormulaOrder {
    bool operator()(const Formula& x, const Formula& y) const;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.id(); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

Formula parse(const std::string& text, Lang lang);
std::string print(const Formula& f);

std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> atoms_of(const std::vector<Formula>& fs);

bool is_purely_modal(const Formula& f);

// Outermost modal subformulas and bare atoms, in the fixed order.
std::vector<Formula> opaque_atoms(const std::vector<Formula>& fs);
std::vector<Formula> modal_subformulas(const Formula& f);  // all, deduplicated, fixed order

Formula substitute(const Formula& f, const std::map<std::string, Formula>& m);

struct Skeleton {
    Formula skeleton;
    std::vector<std::string> p_atoms;
    std::vector<std::string> q_atoms;
    std::map<std::string, Formula> bindings;
};

Skeleton skeleton(const Formula& f);
Formula pre_interpolant(const Formula& f);

// Opaque-atom truth table.
bool classical_entails(const std::vector<Formula>& gamma, const Formula& a);
bool classically_valid(const Formula& a);
bool classically_equivalent(const Formula& a, const Formula& b);

// Evaluation with an assignment to opaque atoms (bare atoms and outermost modal subformulas).
template <class Assign>
bool eval_classical(const Formula& f, const Assign& val) {
    switch (f.kind()) {
    case Kind::Bot:
        return false;
    case Kind::Imp:
        return !eval_classical(f.left(), val) || eval_classical(f.right(), val);
    default:
        return val(f);
    }
}

struct Phrase {
    std::vector<Formula> x;  // antecedent
    std::vector<Formula> y;  // consequent
    bool operator==(const Phrase& o) const { return x == o.x && y == o.y; }
    Formula as_formula(Lang l) const;
    std::string str() const;
};

std::vector<Phrase> phrase_cnf(const Formula& a);

}  // namespace provmod
