#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "provmod/formula.hpp"

namespace provmod {

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite frame with named worlds; relation kept both as lists and as a matrix.
class Frame {
public:
    Frame() = default;
    Frame(std::vector<std::string> worlds, const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t size() const { return names_.size(); }
    const std::string& name(int w) const { return names_.at(w); }
    const std::vector<std::string>& names() const { return names_; }
    int index(const std::string& w) const;
    bool has(const std::string& w) const { return index_.count(w) != 0; }

    bool rel(int w, int u) const { return mat_[w][u]; }
    const std::vector<int>& succ(int w) const { return succ_[w]; }
    const std::vector<int>& pred_list(int w) const { return pred_[w]; }
    bool accessible(int w) const { return !pred_[w].empty(); }
    std::vector<std::pair<int, int>> edges() const;

    // transitive closure
    bool rel_plus(int w, int u) const { return plus_[w][u]; }
    std::vector<int> succ_plus(int w) const;

    bool is_acyclic() const;
    bool is_transitive() const;
    bool is_tree() const;

    // order utilities
    bool immediate_pred(int w, int u) const;  // w is an immediate predecessor of u
    int pred(int w) const;                     // throws on non-trees and roots
    bool sim(int w, int u) const;
    bool hat_less(int w, int u) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> succ_, pred_;
    std::vector<std::vector<bool>> mat_, plus_;
};

using Valuation = std::vector<std::set<std::string>>;

struct KripkeModel {
    Frame frame;
    Valuation val;

    KripkeModel() = default;
    KripkeModel(Frame f, Valuation v);
    static KripkeModel make(const std::vector<std::string>& worlds,
                            const std::vector<std::pair<std::string, std::string>>& edges,
                            const std::map<std::string, std::set<std::string>>& valuation);

    std::size_t size() const { return frame.size(); }
    bool holds(int w, const std::string& p) const { return val[w].count(p) != 0; }
};

struct PropertyCheck {
    bool holds = true;
    std::vector<std::string> witness;
};

struct FrameReport {
    PropertyCheck reflexive, irreflexive, transitive, converse_well_founded, tree;
};

FrameReport check_frame(const Frame& f);

std::vector<bool> truth_set(const KripkeModel& k, const Formula& a);
// One pass with a shared memo.
std::vector<std::vector<bool>> truth_sets(const KripkeModel& k, const std::vector<Formula>& as);
bool forces(const KripkeModel& k, int w, const Formula& a);
bool forces(const KripkeModel& k, const std::string& w, const Formula& a);
bool forces_plus(const KripkeModel& k, int w, const Formula& a);
bool forces_plus(const KripkeModel& k, const std::string& w, const Formula& a);

// Veltman model: preorder[w][u][v] means u <=_w v.
struct VeltmanModel {
    KripkeModel base;
    std::vector<std::vector<std::vector<bool>>> le;

    VeltmanModel() = default;
    VeltmanModel(KripkeModel k, std::vector<std::vector<std::vector<bool>>> preorders);
    static VeltmanModel make(const std::vector<std::string>& worlds,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             const std::map<std::string, std::vector<std::pair<std::string, std::string>>>& preorders,
                             const std::map<std::string, std::set<std::string>>& valuation);
    // Smallest preorders meeting the frame clauses.
    static std::vector<std::vector<std::vector<bool>>> minimal_preorders(const Frame& f);

    std::size_t size() const { return base.size(); }
    const Frame& frame() const { return base.frame; }
    // empty when valid
    std::optional<std::string> violation() const;
};

std::vector<bool> veltman_truth_set(const VeltmanModel& v, const Formula& a, bool symmetric = false);
std::vector<std::vector<bool>> veltman_truth_sets(const VeltmanModel& v, const std::vector<Formula>& as,
                                                  bool symmetric = false);
bool veltman_forces(const VeltmanModel& v, int w, const Formula& a);
bool veltman_forces_symmetric(const VeltmanModel& v, int w, const Formula& a);

// Tree of increasing sequences.
struct Unravelled {
    std::vector<std::vector<int>> seqs;        // worlds of the source model
    std::vector<int> parent;                   // -1 for length-one sequences
    std::vector<std::vector<int>> children;
    std::vector<std::vector<bool>> le;         // le[s][t]: s <=_0 t (siblings only)
    Valuation val;
    std::vector<std::string> names;            // "w0.w1" style

    std::size_t size() const { return seqs.size(); }
    int last(int s) const { return seqs[s].back(); }
    KripkeModel as_kripke() const;
};

Unravelled unravel(const VeltmanModel& v);
std::vector<bool> unravelled_truth_set(const Unravelled& u, const Formula& a);
std::vector<std::vector<bool>> unravelled_truth_sets(const Unravelled& u, const std::vector<Formula>& as);
bool unravelled_forces(const Unravelled& u, int s, const Formula& a);

std::string to_dot(const KripkeModel& k);

}  // namespace provmod
