#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logicprob/rational.hpp"
#include "logicprob/report.hpp"

namespace logicprob {

struct qnumber_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decidable index sets: finite boolean combinations of finite sets, residue
// classes and tail sets. Every such set is eventually periodic, so membership,
// emptiness and natural density are all computable exactly.
class IndexSet {
public:
    enum class Kind { Finite, Cofinite, Residue, Threshold, Inter, Union, Compl };

    static IndexSet finite(std::set<long> elements);
    static IndexSet cofinite(std::set<long> excluded);
    static IndexSet residue(long a, long m); // { n | n = a (mod m) }, m >= 1
    static IndexSet threshold(long m);       // { n | n > m }, m >= 0
    static IndexSet naturals() { return cofinite({}); }
    static IndexSet none() { return finite({}); }
    static IndexSet intersect(IndexSet a, IndexSet b);
    static IndexSet unite(IndexSet a, IndexSet b);
    static IndexSet complement(IndexSet a);

    Kind kind() const { return node_->kind; }
    const std::set<long>& elements() const;  // Finite / Cofinite
    long residue_class() const;              // Residue
    long modulus() const;                    // Residue
    long bound() const;                      // Threshold
    IndexSet left() const;                   // Inter / Union
    IndexSet right() const;                  // Inter / Union
    IndexSet inner() const;                  // Compl

private:
    struct Node {
        Kind kind;
        std::set<long> elems;
        long a = 0, m = 0;
        std::shared_ptr<const Node> x, y;
    };
    explicit IndexSet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

bool contains(const IndexSet& s, long n); // n >= 1
std::string render_index_set(const IndexSet& s);

// Count of members in {1..n}, over n. Exact; n >= 1.
Rational freq(const IndexSet& s, long n);

// Limit of freq(s, n): the fraction of true residues in the eventual period.
Rational density(const IndexSet& s);

// Membership in the density filter: density exactly 1.
bool in_filter(const IndexSet& s);

bool is_empty(const IndexSet& s);
bool subset_of(const IndexSet& a, const IndexSet& b);

// ---------------------------------------------------------------------------
// Sequences and their classes

// Polynomial with rational coefficients, ascending order.
class Poly {
public:
    Poly() = default; // zero
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(Rational c);
    static Poly identity(); // n

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& lead() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational eval(long n) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::vector<long> positive_integer_roots() const; // nonzero polynomials only
    std::string str() const;

private:
    std::vector<Rational> c_;
};

// A real-valued sequence in closed form: a rational function of the index
// plus finitely many pointwise overrides. Constants and the identity sequence
// are the degenerate cases.
class SeqReal {
public:
    static SeqReal constant(Rational c);
    static SeqReal identity();
    static SeqReal rational_function(Poly num, Poly den); // den not the zero polynomial
    static SeqReal patch(SeqReal base, long index, Rational value); // index >= 1

    // nullopt when the denominator vanishes and no override applies.
    std::optional<Rational> value_at(long n) const;
    // Every n at or beyond this index is defined.
    long defined_from() const;

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const std::map<long, Rational>& overrides() const { return overrides_; }

    std::string str() const;

private:
    SeqReal(Poly num, Poly den, std::map<long, Rational> overrides);
    Poly num_, den_;
    std::map<long, Rational> overrides_;
};

// Exact index set { n | r_n = s_n }; always finite or cofinite for the
// supported sequence forms.
IndexSet agreement_set(const SeqReal& r, const SeqReal& s);

// A number represented by one sequence; two numbers are equal when their
// representatives agree on a density-1 index set.
class QNumber {
public:
    explicit QNumber(SeqReal rep) : rep_(std::move(rep)) {}
    static QNumber standard(Rational value) { return QNumber(SeqReal::constant(std::move(value))); }

    const SeqReal& rep() const { return rep_; }

private:
    SeqReal rep_;
};

bool q_eq(const QNumber& a, const QNumber& b);
QNumber q_add(const QNumber& a, const QNumber& b);
QNumber q_sub(const QNumber& a, const QNumber& b);
QNumber q_mul(const QNumber& a, const QNumber& b);
QNumber q_div(const QNumber& a, const QNumber& b); // divisor must not be Q-zero

enum class QClass { Standard, Infinitesimal, InfinitelyLarge, FiniteNonstandard, Mixed };

struct Classification {
    QClass kind;
    std::optional<Rational> value; // Standard only
};

const char* qclass_name(QClass k);

Classification classify(const QNumber& a);

bool infinitely_near(const QNumber& a, const QNumber& b);

// Random-set exercise of the frequency and filter laws: the two frequency
// partition identities, closure of the filter under intersection and
// superset, plus the even-numbers witness that the filter is not an
// ultrafilter.
CheckReport filter_laws_check(std::size_t samples,
                              std::uint64_t seed = kDefaultCheckSeed);

} // namespace logicprob
