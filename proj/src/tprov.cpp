#include "provmod/tprov.hpp"

#include <stdexcept>

#include "provmod/decide.hpp"

namespace provmod {

PhraseTrace phrase_trace(const Phrase& ph, const TheoryOracle& t) {
    PhraseTrace tr{ph, {}, std::nullopt, false, true};
    bool hyp = true;
    for (const auto& x : ph.x) {
        if (x.kind() != Kind::Box) {
            tr.bare_atoms = true;
            continue;
        }
        bool d = t.derives(x.sub());
        tr.antecedent.emplace_back(x, d);
        hyp = hyp && d;
    }
    for (const auto& y : ph.y) {
        if (y.kind() != Kind::Box) {
            tr.bare_atoms = true;
            continue;
        }
        if (!tr.witness && t.derives(y.sub())) tr.witness = y;
    }
    tr.value = !hyp || tr.witness.has_value();
    return tr;
}

bool phrase_truth(const Phrase& ph, const TheoryOracle& t) { return phrase_trace(ph, t).value; }

InterpretationResult t_interpretation(const Formula& a, const TheoryOracle& t) {
    if (a.lang() != Lang::Box || t.lang() != Lang::Box) throw std::invalid_argument("interpretation needs L_box");
    InterpretationResult r{a, t.descriptor(), true, {}};
    for (const auto& ph : phrase_cnf(a)) {
        r.trace.push_back(phrase_trace(ph, t));
        r.truth = r.truth && r.trace.back().value;
    }
    return r;
}

Formula incompleteness_witness(const TheoryOracle& t) {
    Formula bb = Formula::box(Formula::bot());
    Formula w = t.derives(Formula::bot()) ? bb : Formula::neg(bb);
    if (!t_interpretation(w, t).truth) throw std::logic_error("witness interpretation is false");
    if (decide_gl(w).status != Status::NonTheorem) throw std::logic_error("witness is a GL theorem");
    return w;
}

std::vector<Formula> gate_sample() {
    static const char* texts[] = {"p", "q", "~p", "[]p", "[]q", "p -> q", "[]p -> []q", "[](p -> q)",
                                  "[]bot", "~[]bot", "bot", "top", "p & q", "[][]p", "<>p"};
    std::vector<Formula> out;
    for (const char* s : texts) out.push_back(parse(s, Lang::Box));
    return out;
}

GateReport soundness_gate(const TheoryOracle& t, const std::vector<Formula>& corpus) {
    for (const auto& c : corpus)
        if (decide_gl(c).status != Status::Theorem)
            throw std::invalid_argument("corpus member is not a GL theorem: " + print(c));
    GateReport r;
    auto sample = gate_sample();
    r.sample = "corpus plus " + std::to_string(sample.size()) + " formulas over p, q of depth <= 2";
    for (const auto& c : corpus)
        if (!t.derives(c)) {
            r.contains_gl = {false, print(c)};
            r.probes.emplace_back("containment", Formula::box(c));
            break;
        }
    std::vector<Formula> fam = sample;
    fam.insert(fam.end(), corpus.begin(), corpus.end());
    for (const auto& a : fam) {
        if (!r.mp_closed.passed) break;
        if (!t.derives(a)) continue;
        for (const auto& b : fam)
            if (t.derives(Formula::imp(a, b)) && !t.derives(b)) {
                r.mp_closed = {false, print(a) + " ; " + print(Formula::imp(a, b))};
                r.probes.emplace_back("mp", Formula::imp(Formula::box(Formula::imp(a, b)),
                                                         Formula::imp(Formula::box(a), Formula::box(b))));
                break;
            }
    }
    for (const auto& a : fam)
        if (t.derives(a) && !t.derives(Formula::box(a))) {
            r.nec_closed = {false, print(a)};
            r.probes.emplace_back("nec", Formula::imp(Formula::box(a), Formula::box(Formula::box(a))));
            break;
        }
    for (const auto& c : corpus) r.corpus.emplace_back(c, t_interpretation(c, t).truth);
    if (r.gates_passed())
        for (const auto& [c, v] : r.corpus) r.forward_holds = r.forward_holds && v;
    for (const auto& [gate, f] : r.probes)
        if (t_interpretation(f, t).truth) throw std::logic_error("probe for " + gate + " is not a counterexample");
    return r;
}

}  // namespace provmod
