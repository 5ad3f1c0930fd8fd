#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "provmod/decide.hpp"
#include "provmod/formula.hpp"
#include "provmod/kripke.hpp"
#include "provmod/theory.hpp"

namespace provmod {

// Pre-model or provability model. Theories sit exactly at the accessible worlds.
class ProvabilityModel {
public:
    ProvabilityModel(Frame frame, Valuation val, std::vector<Theory> theories, Lang lang);

    const Frame& frame() const { return frame_; }
    const Valuation& valuation() const { return val_; }
    Lang lang() const { return lang_; }
    std::size_t size() const { return frame_.size(); }
    const Theory& theory(int w) const;
    bool has_theory(int w) const { return theories_.at(w) != nullptr; }
    const std::vector<Theory>& theories() const { return theories_; }
    KripkeModel kripke() const { return KripkeModel(frame_, val_); }

    // family for |> evaluation; bounded unless it covers all formulas up to equivalence
    void set_e_family(std::vector<Formula> fam, bool family_bounded);
    const std::vector<Formula>& e_family() const { return e_family_; }
    bool family_bounded() const { return family_bounded_; }

    // how modal completeness is guaranteed: "lifted", "generated", or a checked family description
    std::string certificate;

    bool is_tree() const { return tree_; }
    int tree_pred(int w) const { return tree_pred_.at(w); }

    bool forces(int w, const Formula& a) const;
    bool forces_plus(int w, const Formula& a) const;

private:
    Frame frame_;
    Valuation val_;
    std::vector<Theory> theories_;
    Lang lang_;
    std::vector<Formula> e_family_;
    bool family_bounded_ = true;
    bool tree_ = false;
    std::vector<int> tree_pred_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint64_t, bool> memo_;
};

using PModel = std::shared_ptr<ProvabilityModel>;

PModel make_pre_model(const Frame& f, const Valuation& v, std::vector<Theory> theories, Lang lang);

bool pm_forces(const ProvabilityModel& p, int w, const Formula& a);
bool pm_forces_plus(const ProvabilityModel& p, int w, const Formula& a);
bool pm_forces_rhd(const ProvabilityModel& p, int w, const Formula& a, const std::vector<Formula>& e_family);

PModel lift_kripke(const KripkeModel& k, bool transitive);

struct ProjectionReport {
    KripkeModel kripke;
    bool equivalent = true;
    std::string witness;
};
// Throws ModelError when local soundness or local completeness fails on the family.
ProjectionReport project_and_check(const ProvabilityModel& p, const std::vector<Formula>& family);

PModel generate_gl(const ProvabilityModel& seed);
PModel generate_ilm(const ProvabilityModel& seed, const std::vector<Formula>& caller_family = {});

// All disjunctions of minterms over the atoms, as a family for |> evaluation.
std::vector<Formula> boolean_family(const std::vector<std::string>& atoms, Lang lang);

struct PipelineResult {
    PModel model;
    int world = 0;
    int n = 0;
    std::optional<KripkeModel> kripke;
    std::optional<VeltmanModel> veltman;
    std::optional<Unravelled> unravelled;
    std::vector<std::string> soundness_failures;
};

PipelineResult countermodel_pipeline_gl(const Formula& a);
PipelineResult countermodel_pipeline_ilm(const Formula& a, int bound = 3, const std::vector<Formula>& family = {});

struct IsoResult {
    bool isomorphic = true;
    std::string witness;
};
IsoResult is_l_isomorphic(const ProvabilityModel& a, const ProvabilityModel& b, const std::vector<Formula>& family);

enum class SuiteLogic { K, K4, S4, GL, ILM };
// Formulas of the given modal depth over the atoms used to instantiate axiom schemes.
std::vector<Formula> instance_family(const std::vector<std::string>& atoms, int depth, Lang lang);
std::vector<Formula> axiom_instances(SuiteLogic logic, const std::vector<Formula>& fillers);
// Failing instances as "world: formula" strings.
std::vector<std::string> soundness_suite(const ProvabilityModel& p, SuiteLogic logic,
                                         const std::vector<Formula>& fillers);

// Modal completeness over a family of purely modal formulas; empty when it holds.
std::string modal_completeness_violation(const ProvabilityModel& p, const std::vector<Formula>& family);

}  // namespace provmod
