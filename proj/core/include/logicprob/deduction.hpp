#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "logicprob/formula.hpp"

namespace logicprob {

// Hypotheses are a set: the calculus merges and reorders hypothesis lists
// freely, so list order carries no meaning.
struct Sequent {
    std::set<Formula> hypotheses;
    Formula conclusion;

    friend bool operator==(const Sequent& a, const Sequent& b) {
        return a.conclusion == b.conclusion && a.hypotheses == b.hypotheses;
    }
};

// Step justifications. Premise indices are 0-based positions of strictly
// earlier steps in the same proof.
namespace rules {

struct Axiom {};
struct RConjLeft  { std::size_t premise; };
struct RConjRight { std::size_t premise; };
struct IConj      { std::size_t left, right; };
struct RNeg       { std::size_t premise; };
// pos concludes A, neg concludes (~A); `discharged` is removed from both
// premises' hypothesis sets (removal of an absent formula is a no-op).
struct INeg       { std::size_t pos, neg; Formula discharged; };

} // namespace rules

using Justification = std::variant<rules::Axiom, rules::RConjLeft, rules::RConjRight,
                                   rules::IConj, rules::RNeg, rules::INeg>;

const char* rule_name(const Justification& j);

struct ProofStep {
    Sequent sequent;
    Justification rule;
};

struct Proof {
    std::vector<ProofStep> steps;

    friend bool operator==(const Proof& a, const Proof& b);
};

struct Violation {
    std::size_t step;   // 0-based
    std::string rule;
    std::string reason;
};

// nullopt when the step is licensed by its justification.
std::optional<Violation> check_step(const Proof& proof, std::size_t index);

// Earliest violation, or nullopt when every step checks. An empty proof is a
// violation.
std::optional<Violation> check_proof(const Proof& proof);

struct proof_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Final step's sequent; throws proof_error unless check_proof passes.
const Sequent& conclusion_of(const Proof& proof);

struct proof_parse_error : std::runtime_error {
    proof_parse_error(std::string msg, std::size_t line)
        : std::runtime_error(std::move(msg)), line(line) {}
    std::size_t line; // 1-based
};

// Text format, one step per line:
//   <n>. <h1>, <h2>, ... |- <formula> ; <rule>
// with rule one of: AX | R&L <i> | R&R <i> | I& <i> <j> | R~ <i> | I~ <i> <j> <formula>.
// Step and premise numbers are 1-based; an empty hypothesis set renders as
// nothing before "|-". render_proof . parse_proof is the identity.
std::string render_proof(const Proof& proof);
Proof parse_proof(const std::string& text);

std::string render_sequent(const Sequent& s);

} // namespace logicprob
