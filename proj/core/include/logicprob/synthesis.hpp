#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "logicprob/deduction.hpp"
#include "logicprob/formula.hpp"

namespace logicprob {

// Builds a checker-accepted proof of
//   { literal_form(B, g) : B in atoms_of(f) } |- literal_form(f, g)
// by structural recursion on f. Emits at most 3 steps per connective plus one
// axiom per atom occurrence.
Proof derive_literal_sequent(const Formula& f, const TruthAssignment& g);

struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Merges a proof of {(~b)} u G |- A with a proof of {b} u G |- A into a proof
// of G |- A by a fixed five-step continuation (axiom on (~A), three negation
// introductions, one negation removal). Throws schema_error when the two
// conclusions differ or the hypothesis sets do not match off b / (~b).
Proof eliminate_hypothesis(const Proof& neg_proof, const Proof& pos_proof,
                           const Formula& pivot);

struct not_tautology_error : std::runtime_error {
    explicit not_tautology_error(TruthAssignment g)
        : std::runtime_error("not a tautology"), counterexample(std::move(g)) {}
    TruthAssignment counterexample;
};

struct EliminationRound {
    std::string atom;
    std::vector<Proof> merged;
};

struct SynthesisTrace {
    std::vector<std::string> atoms;
    std::size_t assignment_count = 0;
    std::vector<Proof> assignment_proofs; // row order, first atom most significant
    std::vector<EliminationRound> rounds; // last atom eliminated first
};

struct SynthesisResult {
    Proof proof;
    SynthesisTrace trace;
};

inline constexpr std::size_t kDefaultProveAtomLimit = 12;

// Constructive completeness: for a tautology f, derives one literal sequent
// per assignment and then eliminates atoms pairwise until the hypothesis set
// is empty. Throws not_tautology_error (with a falsifying assignment) or
// atom_limit_error.
SynthesisResult prove_tautology(const Formula& f,
                                std::size_t atom_limit = kDefaultProveAtomLimit);

} // namespace logicprob
