#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logicprob/rational.hpp"
#include "logicprob/report.hpp"

namespace logicprob {

// Event-algebra term over named atomic events. Sum is sugar: it is evaluated
// as the complement of the product of the complements.
class EventExpr {
public:
    enum class Kind { Atom, Product, Complement, Sum, T, F };

    static EventExpr atom(std::string name);
    static EventExpr product(EventExpr a, EventExpr b);
    static EventExpr complement(EventExpr a);
    static EventExpr sum(EventExpr a, EventExpr b);
    static EventExpr certain();    // T
    static EventExpr impossible(); // F

    Kind kind() const { return node_->kind; }
    const std::string& atom_name() const;
    EventExpr left() const;  // Product / Sum
    EventExpr right() const; // Product / Sum
    EventExpr inner() const; // Complement

    friend bool operator==(const EventExpr& a, const EventExpr& b);
    friend bool operator!=(const EventExpr& a, const EventExpr& b) { return !(a == b); }

private:
    struct Node {
        Kind kind;
        std::string name;
        std::shared_ptr<const Node> a, b;
    };
    explicit EventExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::string render_event(const EventExpr& e);

// Rewrites every Sum node into its defining complement-of-products form.
EventExpr desugar_sums(const EventExpr& e);

struct model_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxModelAtoms = 20;

// Finite outcome space over m named atomic events with exact nonnegative
// weights summing to 1. Outcomes are indexed by bitmask; the first atom is
// the most significant bit, matching truth-table row order.
class ProbModel {
public:
    static ProbModel product(std::vector<std::pair<std::string, Rational>> atom_probs);
    static ProbModel joint(std::vector<std::string> names,
                           std::vector<Rational> weights); // size 2^m

    std::size_t atom_count() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t outcome_count() const { return std::size_t{1} << names_.size(); }
    std::optional<std::size_t> atom_index(const std::string& name) const;

    bool is_product() const { return !atom_probs_.empty(); }
    const std::vector<Rational>& atom_probs() const { return atom_probs_; }

    Rational weight(std::size_t outcome) const;

    // Every outcome weight is 0 or 1 (forced when all product atoms have
    // probability 0 or 1, or the joint table has a single unit row).
    bool is_degenerate() const;

    static bool outcome_bit(std::size_t outcome, std::size_t atom, std::size_t m) {
        return (outcome >> (m - 1 - atom)) & 1u;
    }

private:
    ProbModel() = default;
    std::vector<std::string> names_;
    std::vector<Rational> atom_probs_; // product form; empty for joint
    std::vector<Rational> weights_;    // joint form; empty for product
};

// Truth of an event on one outcome row.
bool event_occurs(const ProbModel& model, const EventExpr& e, std::size_t outcome);

// Total weight of the outcomes on which the event occurs. The model must bind
// every atom of the event.
Rational b_eval(const ProbModel& model, const EventExpr& e);

// Series of independent trials of one base event, each with the same
// probability. Trial atoms are named s1..sr.
struct TestScheme {
    TestScheme(std::string base_event, std::size_t trial_count, Rational probability);

    std::string base_name;
    std::size_t trials;
    Rational p;

    std::string trial_name(std::size_t i) const; // 1-based
    ProbModel model() const;
};

// All C(r, k) products of r trial factors with exactly k factors left
// uncomplemented; fixed order starting from the pattern with the earliest
// trials uncomplemented.
std::vector<EventExpr> series_members(const TestScheme& scheme, std::size_t r,
                                      std::size_t k);

// Sum of all series members: the event "exactly k successes in r trials".
EventExpr t_sum(const TestScheme& scheme, std::size_t r, std::size_t k);

// C(r,k) p^k (1-p)^(r-k), exact.
Rational bernoulli_pmf(std::size_t r, std::size_t k, const Rational& p);

// Integer bounds for a real success-count window: k = ceil(a), l = floor(b),
// clipped into [0, r].
struct KRange {
    std::size_t k = 0;
    std::size_t l = 0;
    bool empty = false;
    bool clipped_low = false;
    bool clipped_high = false;
};
KRange f_bounds(std::size_t r, const Rational& a, const Rational& b);

// The event "between a and b successes in r trials" as a sum of t-sums;
// impossible when the rounded range is empty.
EventExpr f_event(const TestScheme& scheme, std::size_t r, const Rational& a,
                  const Rational& b);

// Exact partial binomial sum over integer k in [a, b] clipped to [0, r].
Rational binomial_tail(std::size_t r, const Rational& a, const Rational& b,
                       const Rational& p);

// 1 - p(1-p)/(r eps^2); can be negative.
Rational lln_bound(std::size_t r, const Rational& p, const Rational& eps);

struct VarianceMismatch {
    Rational lhs; // weighted sum of squared deviations
    Rational rhs; // r p (1-p)
};

// Checks sum_k (k - rp)^2 pmf(r,k,p) == r p (1-p) exactly; r = 0 is admitted
// and trivially balances.
std::optional<VarianceMismatch> variance_identity_check(std::size_t r,
                                                        const Rational& p);

// Random-event exercise of the additivity laws: monotonicity under product,
// unit/zero values, complement, the two distributivity forms, the addition
// formula, additivity on disjoint pairs, independence transfer to the
// complement, and annihilation. All comparisons are exact.
CheckReport verify_b_identities(const ProbModel& model, std::size_t trials,
                                std::uint64_t seed = kDefaultCheckSeed);

// On a degenerate model, event values form a two-valued homomorphism:
// b(#A) = 1 - b(A) and b(A.B) = b(A) b(B). Throws model_error when the model
// is not degenerate.
CheckReport boolean_restriction_check(const ProbModel& model, std::size_t trials,
                                      std::uint64_t seed = kDefaultCheckSeed);

} // namespace logicprob
