#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logicprob {

// Immutable propositional formula over the two connectives: negation and
// binary conjunction. Atoms are leaves; copies share structure.
class Formula {
public:
    enum class Kind { Atom, Neg, Conj };

    static Formula atom(std::string name);
    static Formula neg(Formula inner);
    static Formula conj(Formula left, Formula right);

    Kind kind() const { return node_->kind; }
    bool is_atom() const { return node_->kind == Kind::Atom; }
    bool is_neg() const { return node_->kind == Kind::Neg; }
    bool is_conj() const { return node_->kind == Kind::Conj; }

    const std::string& atom_name() const;
    Formula inner() const; // Neg only
    Formula left() const;  // Conj only
    Formula right() const; // Conj only

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

    std::size_t connective_count() const;

private:
    struct Node {
        Kind kind;
        std::string name;                  // Atom
        std::shared_ptr<const Node> a, b;  // Neg: a; Conj: a, b
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct parse_error : std::runtime_error {
    parse_error(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
    std::size_t position; // 0-based offset into the input
};

struct unbound_atom_error : std::runtime_error {
    explicit unbound_atom_error(const std::string& name)
        : std::runtime_error("unbound atom: " + name), atom(name) {}
    std::string atom;
};

struct atom_limit_error : std::runtime_error {
    atom_limit_error(std::size_t count, std::size_t limit)
        : std::runtime_error("formula has " + std::to_string(count) +
                             " atoms, limit is " + std::to_string(limit)),
          atoms(count), limit(limit) {}
    std::size_t atoms;
    std::size_t limit;
};

// Lenient concrete syntax: '~' or '!' for negation (binds tighter), infix '&'
// left-associative, parentheses for grouping. Canonical output is fully
// parenthesized: "(~A)", "(A & B)".
Formula parse_formula(const std::string& text);
std::string render_formula(const Formula& f);

// Distinct atom names, lexicographically sorted.
std::vector<std::string> atoms_of(const Formula& f);

// Map from atom name to a 0/1 truth value.
class TruthAssignment {
public:
    TruthAssignment() = default;

    void set(const std::string& atom, int bit);
    std::optional<int> value(const std::string& atom) const;
    bool binds(const std::string& atom) const { return bits_.count(atom) != 0; }
    const std::map<std::string, int>& bindings() const { return bits_; }

    // Assignment number `row` over `atoms`, first atom most significant.
    static TruthAssignment from_row(const std::vector<std::string>& atoms,
                                    std::size_t row);

    friend bool operator==(const TruthAssignment& a, const TruthAssignment& b) {
        return a.bits_ == b.bits_;
    }

private:
    std::map<std::string, int> bits_;
};

inline constexpr std::size_t kDefaultTableAtomLimit = 20;

// Homomorphic extension of the assignment: value of a conjunction is the
// product of the conjunct values, value of a negation is one minus the value
// of its body.
int eval_formula(const Formula& f, const TruthAssignment& g);

struct TableRow {
    TruthAssignment assignment;
    int value;
};

// All 2^k rows over atoms_of(f), assignments in increasing row order.
std::vector<TableRow> truth_table(const Formula& f,
                                  std::size_t atom_limit = kDefaultTableAtomLimit);

// Tab-separated table: header "A\tB\t...\tvalue", one row per assignment.
std::string truth_table_tsv(const Formula& f,
                            std::size_t atom_limit = kDefaultTableAtomLimit);

bool is_tautology(const Formula& f,
                  std::size_t atom_limit = kDefaultTableAtomLimit);

// Returns a falsifying assignment when f is not a tautology.
std::optional<TruthAssignment> find_countermodel(
    const Formula& f, std::size_t atom_limit = kDefaultTableAtomLimit);

// f itself when g makes f true, the negation of f otherwise.
Formula literal_form(const Formula& f, const TruthAssignment& g);

} // namespace logicprob
