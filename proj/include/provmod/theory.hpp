#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "provmod/formula.hpp"
#include "provmod/kripke.hpp"

namespace provmod {

struct RuleTag {
    enum Kind { Mp, Nec, Loeb, PolyNec, PolyLoeb } kind;
    int n = 0;
    std::string str() const;
    bool operator==(const RuleTag& o) const { return kind == o.kind && n == o.n; }
};

enum class Provenance { FiniteAxiomsMp, KripkeWorld, GlTheorems, GlN, Generated, Custom };
const char* provenance_name(Provenance p);

class TheoryOracle {
public:
    using Decider = std::function<bool(const Formula&)>;

    TheoryOracle(Lang lang, std::vector<Formula> axioms, std::vector<RuleTag> rules, Provenance prov, Decider d,
                 std::string descriptor = "");

    bool derives(const Formula& a) const;

    Lang lang() const { return lang_; }
    const std::vector<Formula>& axioms() const { return axioms_; }
    const std::vector<RuleTag>& rules() const { return rules_; }
    Provenance provenance() const { return prov_; }
    // JSON descriptor text, empty when the oracle has none
    const std::string& descriptor() const { return descriptor_; }
    bool has_rule(RuleTag::Kind k) const;

private:
    Lang lang_;
    std::vector<Formula> axioms_;
    std::vector<RuleTag> rules_;
    Provenance prov_;
    Decider decide_;
    std::string descriptor_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, bool> memo_;
};

using Theory = std::shared_ptr<const TheoryOracle>;

Theory finite_axioms_mp(const std::vector<Formula>& axioms, Lang lang = Lang::Box);
Theory kripke_world_theory(std::shared_ptr<const KripkeModel> k, int w, bool transitive);
Theory gl_theorems();
Theory gl_n(int n);
Theory custom_theory(Lang lang, TheoryOracle::Decider d, const std::string& label);

// Sample of classical tautologies and mp triples used by classicality checks.
std::vector<Formula> tautology_sample(Lang lang);
// Returns an empty string when the oracle passes; otherwise the failing formula.
std::string classicality_violation(const TheoryOracle& t, const std::vector<Formula>& family);

}  // namespace provmod
