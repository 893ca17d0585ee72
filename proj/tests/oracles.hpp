#pragma once

// Brute-force oracles for the proof checker, kept independent of the
// synthesis and checking code paths they examine.

#include <set>
#include <string>
#include <vector>

#include "logicprob/deduction.hpp"
#include "logicprob/formula.hpp"

namespace oracles {

inline void collect_atoms(const logicprob::Formula& f, std::set<std::string>& out) {
    using logicprob::Formula;
    switch (f.kind()) {
    case Formula::Kind::Atom: out.insert(f.atom_name()); break;
    case Formula::Kind::Neg: collect_atoms(f.inner(), out); break;
    case Formula::Kind::Conj:
        collect_atoms(f.left(), out);
        collect_atoms(f.right(), out);
        break;
    }
}

inline std::vector<std::string> proof_atoms(const logicprob::Proof& proof) {
    std::set<std::string> names;
    for (const auto& step : proof.steps) {
        collect_atoms(step.sequent.conclusion, names);
        for (const auto& h : step.sequent.hypotheses)
            collect_atoms(h, names);
    }
    return {names.begin(), names.end()};
}

// Soundness invariant: at every step, under every assignment, a false
// conclusion forces some false hypothesis. Enumerates all 2^k assignments
// over every atom occurring anywhere in the proof.
inline bool soundness_invariant_holds(const logicprob::Proof& proof) {
    using namespace logicprob;
    auto atoms = proof_atoms(proof);
    std::size_t rows = std::size_t{1} << atoms.size();
    for (std::size_t row = 0; row < rows; ++row) {
        TruthAssignment g = TruthAssignment::from_row(atoms, row);
        for (const auto& step : proof.steps) {
            if (eval_formula(step.sequent.conclusion, g) != 0)
                continue;
            bool some_false = false;
            for (const auto& h : step.sequent.hypotheses)
                if (eval_formula(h, g) == 0) {
                    some_false = true;
                    break;
                }
            if (!some_false)
                return false;
        }
    }
    return true;
}

} // namespace oracles
