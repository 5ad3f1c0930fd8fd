#pragma once

#include <memory>
#include <string>
#include <vector>

#include "provmod/formula.hpp"
#include "provmod/kripke.hpp"
#include "provmod/theory.hpp"

namespace provmod {

// Poly-provability model with indexed relations 0..max_index. Level 0 is the plain accessibility.
class PolyModel {
public:
    // rels[n] are the edges of relation n; theories[w][n] must be set for every world accessible in relation 0.
    PolyModel(std::vector<std::string> worlds, std::vector<std::vector<std::pair<std::string, std::string>>> rels,
              Valuation val, std::vector<std::vector<Theory>> theories);

    int max_index() const { return static_cast<int>(rels_.size()) - 1; }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    int index(const std::string& w) const { return rels_[0].index(w); }
    const Frame& rel(int n) const { return rels_.at(n); }
    const Valuation& valuation() const { return val_; }
    bool accessible(int w) const { return rels_[0].accessible(w); }
    const Theory& theory(int w, int n) const;
    const std::vector<std::vector<Theory>>& theories() const { return theories_; }

private:
    std::vector<std::string> names_;
    std::vector<Frame> rels_;
    Valuation val_;
    std::vector<std::vector<Theory>> theories_;
};

bool glp_forces(const PolyModel& p, int w, const Formula& a);
// Truth at w and at every world above it in the transitive closure of relation 0.
bool glp_forces_plus_0(const PolyModel& p, int w, const Formula& a);

struct GlpViolation {
    std::string clause;  // nec, loeb, ascending_edge, ascending_theory, pi_completeness, classicality, modal_completeness
    std::string witness;
};

struct GlpReport {
    std::vector<GlpViolation> violations;
    bool ok() const { return violations.empty(); }
    bool has(const std::string& clause) const;
};

GlpReport check_glp_model(const PolyModel& p, const std::vector<Formula>& family);

// Formulas over the atoms up to the given depth, with every index of the model.
std::vector<Formula> glp_instance_family(const std::vector<std::string>& atoms, int depth, int max_index);
std::vector<Formula> glp_axiom_instances(const std::vector<Formula>& fillers, int max_index);

struct GlpSoundnessReport {
    std::size_t instances = 0;
    std::vector<std::string> failures;  // "world: formula"
};
GlpSoundnessReport glp_soundness_suite(const PolyModel& p, const std::vector<std::string>& atoms, int depth);

// Oracle deriving A at (w, n) iff A holds in the Kripke reading of the model at w and every world above it in relation n.
Theory poly_cone_theory(std::shared_ptr<const std::vector<Frame>> rels, std::shared_ptr<const Valuation> val, int w,
                        int n);
// Kripke reading of L_omega over indexed relations.
bool poly_kripke_forces(const std::vector<Frame>& rels, const Valuation& val, int w, const Formula& a);

}  // namespace provmod
