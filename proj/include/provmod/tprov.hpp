#pragma once

#include <optional>
#include <string>
#include <vector>

#include "provmod/formula.hpp"
#include "provmod/theory.hpp"

namespace provmod {

struct PhraseTrace {
    Phrase phrase;
    std::vector<std::pair<Formula, bool>> antecedent;  // boxed members of X and whether T derives the body
    std::optional<Formula> witness;                     // boxed member of Y whose body T derives
    bool bare_atoms = false;                            // phrase mentions atoms outside any box
    bool value = true;
};

struct InterpretationResult {
    Formula formula;
    std::string theory;
    bool truth = true;
    std::vector<PhraseTrace> trace;
};

bool phrase_truth(const Phrase& ph, const TheoryOracle& t);
PhraseTrace phrase_trace(const Phrase& ph, const TheoryOracle& t);
InterpretationResult t_interpretation(const Formula& a, const TheoryOracle& t);

// []bot when T is inconsistent, ~[]bot otherwise; checked to be a true non-theorem of GL.
Formula incompleteness_witness(const TheoryOracle& t);

struct GateCheck {
    bool passed = true;
    std::string witness;
};

struct GateReport {
    std::string sample;                 // description of the sampled family
    GateCheck contains_gl, mp_closed, nec_closed;
    std::vector<std::pair<Formula, bool>> corpus;  // corpus member and its interpretation
    bool forward_holds = true;          // gates passed implies every corpus member true
    // gate failures matched to corpus-style counterexamples whose interpretation is false
    std::vector<std::pair<std::string, Formula>> probes;
    bool gates_passed() const { return contains_gl.passed && mp_closed.passed && nec_closed.passed; }
};

// Throws std::invalid_argument when a corpus member is not a GL theorem.
GateReport soundness_gate(const TheoryOracle& t, const std::vector<Formula>& corpus);
std::vector<Formula> gate_sample();

}  // namespace provmod
