#include "logicprob/synthesis.hpp"

namespace logicprob {

namespace {

std::set<Formula> minus(std::set<Formula> s, const Formula& f) {
    s.erase(f);
    return s;
}

std::set<Formula> unite(std::set<Formula> a, const std::set<Formula>& b) {
    a.insert(b.begin(), b.end());
    return a;
}

class LiteralDerivation {
public:
    LiteralDerivation(const TruthAssignment& g) : g_(g) {}

    Proof run(const Formula& f) {
        build(f);
        return std::move(proof_);
    }

private:
    std::size_t push(Sequent s, Justification j) {
        proof_.steps.push_back({std::move(s), std::move(j)});
        return proof_.steps.size() - 1;
    }

    const Sequent& at(std::size_t i) const { return proof_.steps[i].sequent; }

    // The calculus has no weakening rule, so a missing hypothesis is smuggled
    // in through a conjunction: from H |- C and the axiom on the literal L,
    // conclude H u {L} |- (C & L) and project C back out.
    std::size_t pad_hypothesis(std::size_t from, const Formula& lit) {
        std::size_t ax = push({{lit}, lit}, rules::Axiom{});
        Formula conjoined = Formula::conj(at(from).conclusion, lit);
        Sequent widened{unite(at(from).hypotheses, {lit}), conjoined};
        std::size_t both = push(std::move(widened), rules::IConj{from, ax});
        Sequent back{at(both).hypotheses, at(both).conclusion.left()};
        return push(std::move(back), rules::RConjLeft{both});
    }

    // Raises `from` so its hypothesis set covers the literal of every atom of
    // `target`, in atom order.
    std::size_t pad_to_atoms(std::size_t from, const Formula& target) {
        for (const auto& name : atoms_of(target)) {
            Formula lit = literal_form(Formula::atom(name), g_);
            if (!at(from).hypotheses.count(lit))
                from = pad_hypothesis(from, lit);
        }
        return from;
    }

    // Appends steps concluding
    //   { literal of every atom of f } |- literal_form(f, g)
    // and returns the index of that concluding step, which is always the last
    // one appended.
    std::size_t build(const Formula& f) {
        switch (f.kind()) {
        case Formula::Kind::Atom: {
            Formula lit = literal_form(f, g_);
            return push({{lit}, lit}, rules::Axiom{});
        }
        case Formula::Kind::Neg: {
            Formula body = f.inner();
            std::size_t sub = build(body);
            if (eval_formula(f, g_) == 1) {
                // The sub-proof already concludes (~body), which is f itself.
                return sub;
            }
            // g makes body true: close under (~(~body)) via the discharged (~body).
            Formula nbody = Formula::neg(body);
            std::size_t ax = push({{nbody}, nbody}, rules::Axiom{});
            Sequent concl{minus(at(sub).hypotheses, nbody), Formula::neg(nbody)};
            return push(std::move(concl), rules::INeg{sub, ax, nbody});
        }
        case Formula::Kind::Conj: {
            if (eval_formula(f, g_) == 1) {
                std::size_t l = build(f.left());
                std::size_t r = build(f.right());
                Sequent concl{unite(at(l).hypotheses, at(r).hypotheses), f};
                return push(std::move(concl), rules::IConj{l, r});
            }
            // At least one conjunct is falsified; prefer the left one. The
            // skipped conjunct's atoms still owe the sequent their literals.
            bool use_left = eval_formula(f.left(), g_) == 0;
            Formula side = use_left ? f.left() : f.right();
            std::size_t sub = pad_to_atoms(build(side), f); // concludes (~side)
            std::size_t ax = push({{f}, f}, rules::Axiom{});
            std::size_t proj =
                use_left ? push({{f}, side}, Justification(rules::RConjLeft{ax}))
                         : push({{f}, side}, Justification(rules::RConjRight{ax}));
            Sequent concl{minus(at(sub).hypotheses, f), Formula::neg(f)};
            return push(std::move(concl), rules::INeg{proj, sub, f});
        }
        }
        throw std::logic_error("unreachable");
    }

    const TruthAssignment& g_;
    Proof proof_;
};

// Appends src's steps to dst, shifting premise indices.
void append_shifted(Proof& dst, const Proof& src) {
    std::size_t offset = dst.steps.size();
    for (const auto& step : src.steps) {
        Justification shifted = std::visit(
            [&](auto r) -> Justification {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, rules::Axiom>) {
                    return r;
                } else if constexpr (std::is_same_v<T, rules::IConj>) {
                    r.left += offset;
                    r.right += offset;
                    return r;
                } else if constexpr (std::is_same_v<T, rules::INeg>) {
                    r.pos += offset;
                    r.neg += offset;
                    return r;
                } else {
                    r.premise += offset;
                    return r;
                }
            },
            step.rule);
        dst.steps.push_back({step.sequent, std::move(shifted)});
    }
}

} // namespace

Proof derive_literal_sequent(const Formula& f, const TruthAssignment& g) {
    for (const auto& name : atoms_of(f))
        if (!g.binds(name))
            throw unbound_atom_error(name);
    return LiteralDerivation(g).run(f);
}

Proof eliminate_hypothesis(const Proof& neg_proof, const Proof& pos_proof,
                           const Formula& pivot) {
    if (neg_proof.steps.empty() || pos_proof.steps.empty())
        throw schema_error("cannot merge an empty proof");

    const Sequent& neg_end = neg_proof.steps.back().sequent;
    const Sequent& pos_end = pos_proof.steps.back().sequent;
    Formula goal = neg_end.conclusion;
    Formula neg_pivot = Formula::neg(pivot);

    if (pos_end.conclusion != goal)
        throw schema_error("premise proofs conclude different formulas: " +
                           render_formula(goal) + " vs " +
                           render_formula(pos_end.conclusion));
    if (minus(neg_end.hypotheses, neg_pivot) != minus(pos_end.hypotheses, pivot))
        throw schema_error("premise hypothesis sets do not match off " +
                           render_formula(pivot) + " / " + render_formula(neg_pivot));

    Proof merged;
    append_shifted(merged, neg_proof);
    std::size_t from_neg = merged.steps.size() - 1;
    append_shifted(merged, pos_proof);
    std::size_t from_pos = merged.steps.size() - 1;

    // Continuation: assume (~goal), refute the pivot both ways, then discharge
    // (~goal) itself and strip the double negation.
    Formula neg_goal = Formula::neg(goal);
    std::size_t ax = merged.steps.size();
    merged.steps.push_back({{{neg_goal}, neg_goal}, rules::Axiom{}});

    auto ineg = [&](std::size_t pos, std::size_t neg, const Formula& discharged) {
        Sequent s{unite(minus(merged.steps[pos].sequent.hypotheses, discharged),
                        minus(merged.steps[neg].sequent.hypotheses, discharged)),
                  Formula::neg(discharged)};
        merged.steps.push_back({std::move(s), rules::INeg{pos, neg, discharged}});
        return merged.steps.size() - 1;
    };

    std::size_t not_not_pivot = ineg(from_neg, ax, neg_pivot);
    std::size_t not_pivot = ineg(from_pos, ax, pivot);
    std::size_t not_not_goal = ineg(not_pivot, not_not_pivot, neg_goal);

    merged.steps.push_back(
        {{merged.steps[not_not_goal].sequent.hypotheses, goal}, rules::RNeg{not_not_goal}});
    return merged;
}

SynthesisResult prove_tautology(const Formula& f, std::size_t atom_limit) {
    auto atoms = atoms_of(f);
    if (atoms.size() > atom_limit)
        throw atom_limit_error(atoms.size(), atom_limit);
    if (auto countermodel = find_countermodel(f))
        throw not_tautology_error(*countermodel);

    SynthesisTrace trace;
    trace.atoms = atoms;
    trace.assignment_count = std::size_t{1} << atoms.size();

    std::vector<Proof> current;
    current.reserve(trace.assignment_count);
    for (std::size_t row = 0; row < trace.assignment_count; ++row)
        current.push_back(
            derive_literal_sequent(f, TruthAssignment::from_row(atoms, row)));
    trace.assignment_proofs = current;

    // Rows are ordered with the last atom toggling fastest, so eliminating
    // atoms back-to-front always pairs adjacent proofs.
    for (std::size_t i = atoms.size(); i-- > 0;) {
        Formula pivot = Formula::atom(atoms[i]);
        EliminationRound round{atoms[i], {}};
        std::vector<Proof> next;
        next.reserve(current.size() / 2);
        for (std::size_t j = 0; j + 1 < current.size(); j += 2) {
            next.push_back(eliminate_hypothesis(current[j], current[j + 1], pivot));
            round.merged.push_back(next.back());
        }
        trace.rounds.push_back(std::move(round));
        current = std::move(next);
    }

    return {std::move(current.front()), std::move(trace)};
}

} // namespace logicprob
