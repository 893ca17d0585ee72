#include "logicprob/event.hpp"

#include "logicprob/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

namespace logicprob {

EventExpr EventExpr::atom(std::string name) {
    if (name.empty())
        throw std::invalid_argument("empty event name");
    return EventExpr(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}

EventExpr EventExpr::product(EventExpr a, EventExpr b) {
    return EventExpr(std::make_shared<const Node>(
        Node{Kind::Product, {}, std::move(a.node_), std::move(b.node_)}));
}

EventExpr EventExpr::complement(EventExpr a) {
    return EventExpr(std::make_shared<const Node>(
        Node{Kind::Complement, {}, std::move(a.node_), nullptr}));
}

EventExpr EventExpr::sum(EventExpr a, EventExpr b) {
    return EventExpr(std::make_shared<const Node>(
        Node{Kind::Sum, {}, std::move(a.node_), std::move(b.node_)}));
}

EventExpr EventExpr::certain() {
    return EventExpr(std::make_shared<const Node>(Node{Kind::T, {}, nullptr, nullptr}));
}

EventExpr EventExpr::impossible() {
    return EventExpr(std::make_shared<const Node>(Node{Kind::F, {}, nullptr, nullptr}));
}

const std::string& EventExpr::atom_name() const {
    if (node_->kind != Kind::Atom)
        throw std::logic_error("atom_name on non-atom event");
    return node_->name;
}

EventExpr EventExpr::left() const {
    if (node_->kind != Kind::Product && node_->kind != Kind::Sum)
        throw std::logic_error("left on leaf event");
    return EventExpr(node_->a);
}

EventExpr EventExpr::right() const {
    if (node_->kind != Kind::Product && node_->kind != Kind::Sum)
        throw std::logic_error("right on leaf event");
    return EventExpr(node_->b);
}

EventExpr EventExpr::inner() const {
    if (node_->kind != Kind::Complement)
        throw std::logic_error("inner on non-complement event");
    return EventExpr(node_->a);
}

bool operator==(const EventExpr& a, const EventExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case EventExpr::Kind::Atom: return a.atom_name() == b.atom_name();
    case EventExpr::Kind::Product:
    case EventExpr::Kind::Sum: return a.left() == b.left() && a.right() == b.right();
    case EventExpr::Kind::Complement: return a.inner() == b.inner();
    case EventExpr::Kind::T:
    case EventExpr::Kind::F: return true;
    }
    return false;
}

std::string render_event(const EventExpr& e) {
    switch (e.kind()) {
    case EventExpr::Kind::Atom: return e.atom_name();
    case EventExpr::Kind::Product:
        return "(" + render_event(e.left()) + " * " + render_event(e.right()) + ")";
    case EventExpr::Kind::Sum:
        return "(" + render_event(e.left()) + " + " + render_event(e.right()) + ")";
    case EventExpr::Kind::Complement: return "(#" + render_event(e.inner()) + ")";
    case EventExpr::Kind::T: return "T";
    case EventExpr::Kind::F: return "F";
    }
    return {};
}

EventExpr desugar_sums(const EventExpr& e) {
    switch (e.kind()) {
    case EventExpr::Kind::Atom:
    case EventExpr::Kind::T:
    case EventExpr::Kind::F: return e;
    case EventExpr::Kind::Product:
        return EventExpr::product(desugar_sums(e.left()), desugar_sums(e.right()));
    case EventExpr::Kind::Complement:
        return EventExpr::complement(desugar_sums(e.inner()));
    case EventExpr::Kind::Sum:
        return EventExpr::complement(
            EventExpr::product(EventExpr::complement(desugar_sums(e.left())),
                               EventExpr::complement(desugar_sums(e.right()))));
    }
    return e;
}

// ---------------------------------------------------------------------------
// Models

ProbModel ProbModel::product(std::vector<std::pair<std::string, Rational>> atom_probs) {
    if (atom_probs.empty() || atom_probs.size() > kMaxModelAtoms)
        throw model_error("model needs between 1 and " +
                          std::to_string(kMaxModelAtoms) + " atoms");
    ProbModel m;
    for (auto& [name, p] : atom_probs) {
        if (p < Rational(0) || p > Rational(1))
            throw model_error("atom probability out of [0,1]: " + name);
        if (m.atom_index(name))
            throw model_error("duplicate atom: " + name);
        m.names_.push_back(name);
        m.atom_probs_.push_back(p);
    }
    return m;
}

ProbModel ProbModel::joint(std::vector<std::string> names,
                           std::vector<Rational> weights) {
    if (names.empty() || names.size() > kMaxModelAtoms)
        throw model_error("model needs between 1 and " +
                          std::to_string(kMaxModelAtoms) + " atoms");
    ProbModel m;
    for (auto& name : names) {
        if (m.atom_index(name))
            throw model_error("duplicate atom: " + name);
        m.names_.push_back(name);
    }
    if (weights.size() != m.outcome_count())
        throw model_error("joint table needs exactly 2^m weights");
    Rational total(0);
    for (const auto& w : weights) {
        if (w < Rational(0))
            throw model_error("negative outcome weight");
        total += w;
    }
    if (total != Rational(1))
        throw model_error("outcome weights sum to " + total.str() + ", expected 1");
    m.weights_ = std::move(weights);
    return m;
}

std::optional<std::size_t> ProbModel::atom_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Rational ProbModel::weight(std::size_t outcome) const {
    if (outcome >= outcome_count())
        throw model_error("outcome index out of range");
    if (!is_product())
        return weights_[outcome];
    Rational w(1);
    for (std::size_t i = 0; i < names_.size(); ++i)
        w *= outcome_bit(outcome, i, names_.size())
                 ? atom_probs_[i]
                 : Rational(1) - atom_probs_[i];
    return w;
}

bool ProbModel::is_degenerate() const {
    if (is_product()) {
        for (const auto& p : atom_probs_)
            if (p != Rational(0) && p != Rational(1)) return false;
        return true;
    }
    for (const auto& w : weights_)
        if (w != Rational(0) && w != Rational(1)) return false;
    return true;
}

namespace {

void collect_event_atoms(const EventExpr& e, std::set<std::string>& names) {
    switch (e.kind()) {
    case EventExpr::Kind::Atom: names.insert(e.atom_name()); return;
    case EventExpr::Kind::Product:
    case EventExpr::Kind::Sum:
        collect_event_atoms(e.left(), names);
        collect_event_atoms(e.right(), names);
        return;
    case EventExpr::Kind::Complement: collect_event_atoms(e.inner(), names); return;
    case EventExpr::Kind::T:
    case EventExpr::Kind::F: return;
    }
}

} // namespace

bool event_occurs(const ProbModel& model, const EventExpr& e, std::size_t outcome) {
    switch (e.kind()) {
    case EventExpr::Kind::Atom: {
        auto idx = model.atom_index(e.atom_name());
        if (!idx)
            throw model_error("unknown event atom: " + e.atom_name());
        return ProbModel::outcome_bit(outcome, *idx, model.atom_count());
    }
    case EventExpr::Kind::Product:
        return event_occurs(model, e.left(), outcome) &&
               event_occurs(model, e.right(), outcome);
    case EventExpr::Kind::Complement:
        return !event_occurs(model, e.inner(), outcome);
    case EventExpr::Kind::Sum:
        // (A + B) = (#((#A) . (#B)))
        return !(!event_occurs(model, e.left(), outcome) &&
                 !event_occurs(model, e.right(), outcome));
    case EventExpr::Kind::T: return true;
    case EventExpr::Kind::F: return false;
    }
    return false;
}

Rational b_eval(const ProbModel& model, const EventExpr& e) {
    std::set<std::string> atoms;
    collect_event_atoms(e, atoms);
    for (const auto& name : atoms)
        if (!model.atom_index(name))
            throw model_error("unknown event atom: " + name);
    Rational total(0);
    for (std::size_t outcome = 0; outcome < model.outcome_count(); ++outcome)
        if (event_occurs(model, e, outcome))
            total += model.weight(outcome);
    return total;
}

// ---------------------------------------------------------------------------
// Independent test series

TestScheme::TestScheme(std::string base_event, std::size_t trial_count,
                       Rational probability)
    : base_name(std::move(base_event)), trials(trial_count), p(std::move(probability)) {
    if (trials == 0)
        throw model_error("a test series needs at least one trial");
    if (trials > kMaxModelAtoms)
        throw model_error("trial count exceeds " + std::to_string(kMaxModelAtoms));
    if (p < Rational(0) || p > Rational(1))
        throw model_error("trial probability out of [0,1]");
}

std::string TestScheme::trial_name(std::size_t i) const {
    return "s" + std::to_string(i);
}

ProbModel TestScheme::model() const {
    std::vector<std::pair<std::string, Rational>> atoms;
    atoms.reserve(trials);
    for (std::size_t i = 1; i <= trials; ++i)
        atoms.emplace_back(trial_name(i), p);
    return ProbModel::product(std::move(atoms));
}

std::vector<EventExpr> series_members(const TestScheme& scheme, std::size_t r,
                                      std::size_t k) {
    if (r == 0 || r > scheme.trials)
        throw std::out_of_range("series range must be within 1.." +
                                std::to_string(scheme.trials));
    if (k > r)
        throw std::out_of_range("success count " + std::to_string(k) +
                                " out of range 0.." + std::to_string(r));
    std::vector<EventExpr> members;
    std::size_t total = std::size_t{1} << r;
    for (std::size_t pattern = total; pattern-- > 0;) {
        if (static_cast<std::size_t>(std::popcount(pattern)) != k)
            continue;
        // Bit (r - i) of the pattern decides whether trial i is complemented.
        std::optional<EventExpr> prod;
        for (std::size_t i = 1; i <= r; ++i) {
            EventExpr factor = EventExpr::atom(scheme.trial_name(i));
            if (((pattern >> (r - i)) & 1u) == 0)
                factor = EventExpr::complement(factor);
            prod = prod ? EventExpr::product(std::move(*prod), std::move(factor))
                        : std::move(factor);
        }
        members.push_back(std::move(*prod));
    }
    return members;
}

EventExpr t_sum(const TestScheme& scheme, std::size_t r, std::size_t k) {
    auto members = series_members(scheme, r, k);
    EventExpr total = members.front();
    for (std::size_t i = 1; i < members.size(); ++i)
        total = EventExpr::sum(std::move(total), members[i]);
    return total;
}

Rational bernoulli_pmf(std::size_t r, std::size_t k, const Rational& p) {
    if (k > r)
        throw std::out_of_range("success count exceeds trial count");
    if (p < Rational(0) || p > Rational(1))
        throw std::out_of_range("probability out of [0,1]");
    return binomial_coefficient(r, k) * p.pow(k) * (Rational(1) - p).pow(r - k);
}

KRange f_bounds(std::size_t r, const Rational& a, const Rational& b) {
    if (a > b)
        throw std::out_of_range("window bounds out of order: " + a.str() + " > " + b.str());
    KRange range;
    long k = a.ceil_long();
    long l = b.floor_long();
    if (k < 0) {
        k = 0;
        range.clipped_low = true;
    }
    if (l > static_cast<long>(r)) {
        l = static_cast<long>(r);
        range.clipped_high = true;
    }
    if (k > l) {
        range.empty = true;
        return range;
    }
    range.k = static_cast<std::size_t>(k);
    range.l = static_cast<std::size_t>(l);
    return range;
}

EventExpr f_event(const TestScheme& scheme, std::size_t r, const Rational& a,
                  const Rational& b) {
    KRange range = f_bounds(r, a, b);
    if (range.empty)
        return EventExpr::impossible();
    EventExpr acc = t_sum(scheme, r, range.k);
    for (std::size_t k = range.k + 1; k <= range.l; ++k)
        acc = EventExpr::sum(std::move(acc), t_sum(scheme, r, k));
    return acc;
}

Rational binomial_tail(std::size_t r, const Rational& a, const Rational& b,
                       const Rational& p) {
    KRange range = f_bounds(r, a, b);
    if (range.empty)
        return Rational(0);
    Rational total(0);
    for (std::size_t k = range.k; k <= range.l; ++k)
        total += bernoulli_pmf(r, k, p);
    return total;
}

Rational lln_bound(std::size_t r, const Rational& p, const Rational& eps) {
    if (r == 0)
        throw std::out_of_range("trial count must be positive");
    if (eps <= Rational(0))
        throw std::out_of_range("epsilon must be positive");
    return Rational(1) - p * (Rational(1) - p) /
                             (Rational(static_cast<long>(r)) * eps * eps);
}

std::optional<VarianceMismatch> variance_identity_check(std::size_t r,
                                                        const Rational& p) {
    Rational mean = Rational(static_cast<long>(r)) * p;
    Rational lhs(0);
    for (std::size_t k = 0; k <= r; ++k) {
        Rational dev = Rational(static_cast<long>(k)) - mean;
        lhs += dev * dev * bernoulli_pmf(r, k, p);
    }
    Rational rhs = Rational(static_cast<long>(r)) * p * (Rational(1) - p);
    if (lhs == rhs)
        return std::nullopt;
    return VarianceMismatch{lhs, rhs};
}

// ---------------------------------------------------------------------------
// Law suites

namespace {

struct LawSuite {
    const ProbModel& model;
    CheckReport report;

    void expect(bool ok, const std::string& law, const std::string& detail) {
        ++report.checks;
        if (!ok)
            report.violations.push_back({law, detail});
    }

    void expect_eq(const Rational& got, const Rational& want, const std::string& law,
                   const std::string& detail) {
        expect(got == want, law, detail + ": " + got.str() + " != " + want.str());
    }
};

} // namespace

CheckReport verify_b_identities(const ProbModel& model, std::size_t trials,
                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    LawSuite suite{model, {}};
    suite.report.trials = trials;
    const Rational one(1), zero(0);

    for (std::size_t t = 0; t < trials; ++t) {
        EventExpr a = random_event(rng, model.names(), 3);
        EventExpr b = random_event(rng, model.names(), 3);
        EventExpr c = random_event(rng, model.names(), 3);
        auto label = [&](const char* law) {
            return std::string(law) + " on A=" + render_event(a) +
                   " B=" + render_event(b) + " C=" + render_event(c);
        };

        Rational ba = b_eval(model, a);
        Rational bb = b_eval(model, b);
        Rational bc = b_eval(model, c);
        Rational bab = b_eval(model, EventExpr::product(a, b));
        Rational bbc = b_eval(model, EventExpr::product(b, c));

        // p1: monotonicity under product.
        suite.expect(bab <= ba, "p1", label("b(A.B) <= b(A)"));
        // p2 / p4: unit and zero.
        suite.expect_eq(b_eval(model, EventExpr::certain()), one, "p2", "b(T)");
        suite.expect_eq(b_eval(model, EventExpr::impossible()), zero, "p4", "b(F)");
        // p3: complement.
        suite.expect_eq(bb + b_eval(model, EventExpr::complement(b)), one, "p3",
                        label("b(B) + b(#B)"));
        // p5-p7: distributivity forms.
        Rational babc = b_eval(model, EventExpr::product(EventExpr::product(a, b), c));
        Rational bac = b_eval(model, EventExpr::product(a, c));
        Rational lhs5 = b_eval(model, EventExpr::product(a, EventExpr::sum(b, c)));
        suite.expect_eq(lhs5, bab + bac - babc, "p5", label("b(A.(B+C))"));
        Rational lhs6 = b_eval(model, EventExpr::sum(EventExpr::product(a, b),
                                                     EventExpr::product(a, c)));
        suite.expect_eq(lhs6, bab + bac - babc, "p6", label("b((A.B)+(A.C))"));
        suite.expect_eq(lhs5, lhs6, "p7", label("distributivity"));
        // p8: addition formula.
        suite.expect_eq(b_eval(model, EventExpr::sum(b, c)), bb + bc - bbc, "p8",
                        label("b(B+C)"));
        // p9: additivity for antithetical pairs.
        if (bbc == zero)
            suite.expect_eq(b_eval(model, EventExpr::sum(b, c)), bb + bc, "p9",
                            label("b(B+C) with b(B.C)=0"));
        // p10: independence transfers to the complement.
        if (bbc == bb * bc)
            suite.expect_eq(
                b_eval(model, EventExpr::product(b, EventExpr::complement(c))),
                bb * b_eval(model, EventExpr::complement(c)), "p10",
                label("b(B.(#C))"));
        // p11: annihilation.
        suite.expect_eq(
            b_eval(model,
                   EventExpr::product(EventExpr::product(a, EventExpr::complement(a)), c)),
            zero, "p11", label("b(A.(#A).C)"));
    }
    return suite.report;
}

CheckReport boolean_restriction_check(const ProbModel& model, std::size_t trials,
                                      std::uint64_t seed) {
    if (!model.is_degenerate())
        throw model_error("boolean restriction requires a degenerate (0/1) model");
    std::mt19937_64 rng(seed);
    LawSuite suite{model, {}};
    suite.report.trials = trials;
    const Rational one(1), zero(0);

    for (std::size_t t = 0; t < trials; ++t) {
        EventExpr a = random_event(rng, model.names(), 3);
        EventExpr b = random_event(rng, model.names(), 3);
        auto label = [&](const char* what) {
            return std::string(what) + " on A=" + render_event(a) +
                   " B=" + render_event(b);
        };
        Rational ba = b_eval(model, a);
        Rational bb = b_eval(model, b);
        suite.expect(ba == zero || ba == one, "two-valued", label("b(A) in {0,1}"));
        suite.expect_eq(b_eval(model, EventExpr::complement(a)), one - ba, "negation",
                        label("b(#A) = 1 - b(A)"));
        suite.expect_eq(b_eval(model, EventExpr::product(a, b)), ba * bb, "product",
                        label("b(A.B) = b(A) b(B)"));
    }
    return suite.report;
}

} // namespace logicprob
