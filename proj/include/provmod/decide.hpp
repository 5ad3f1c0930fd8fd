#pragma once

#include <optional>
#include <string>
#include <vector>

#include "provmod/formula.hpp"
#include "provmod/kripke.hpp"

namespace provmod {

enum class Status { Theorem, NonTheorem, NonTheoremUpToBoundUnknown };
const char* status_name(Status s);

enum class ModalLogic { K, K4, S4, GL };

struct DecisionVerdict {
    Status status = Status::Theorem;
    std::optional<KripkeModel> countermodel;
    std::optional<VeltmanModel> veltman_countermodel;
    int world = -1;
    std::optional<int> bound;
};

DecisionVerdict decide(ModalLogic logic, const Formula& a);
DecisionVerdict decide_k(const Formula& a);
DecisionVerdict decide_k4(const Formula& a);
DecisionVerdict decide_s4(const Formula& a);
// GL countermodels are finite irreflexive transitive trees rooted at the returned world.
DecisionVerdict decide_gl(const Formula& a);

bool gl_consequence(const std::vector<Formula>& gamma, const Formula& a);

struct FinfalsResult {
    bool agrees = true;         // decide([]^k bot -> A) matches decide(A) for all k <= kmax
    std::optional<int> least_failing_k;
};
FinfalsResult finfals_check(const Formula& a, int kmax);

DecisionVerdict decide_ilm(const Formula& a, int size_bound);

// Enumeration of finite frames (up to isomorphism).
// Irreflexive transitive rooted trees with at most n nodes; world 0 is the root.
std::vector<Frame> transitive_trees(int max_nodes);
// Rooted trees with only parent edges.
std::vector<Frame> plain_trees(int max_nodes);
// All Veltman frames (transitive, acyclic frame plus preorders) on exactly n worlds, up to isomorphism.
std::vector<VeltmanModel> veltman_frames(int n);
// All valuations of the atoms over n worlds.
std::vector<Valuation> all_valuations(std::size_t n, const std::vector<std::string>& atoms);

struct RepresentativeSet {
    std::string logic;  // "gl_n" or "ilm_n"
    int n = 0;
    std::vector<std::string> atoms;
    std::vector<Formula> members;
    // characteristic formula of each type; members are disjunctions of these
    std::vector<Formula> types;
    std::vector<std::vector<int>> member_types;
};

class EnvelopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RepresentativeSet representatives_gl(int n, const std::vector<std::string>& atoms);
RepresentativeSet representatives_ilm(int n, const std::vector<std::string>& atoms);

}  // namespace provmod
