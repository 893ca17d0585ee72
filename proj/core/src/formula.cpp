#include "logicprob/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace logicprob {

Formula Formula::atom(std::string name) {
    if (name.empty())
        throw std::invalid_argument("empty atom name");
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::neg(Formula inner) {
    return Formula(std::make_shared<const Node>(Node{Kind::Neg, {}, std::move(inner.node_), nullptr}));
}

Formula Formula::conj(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::Conj, {}, std::move(left.node_), std::move(right.node_)}));
}

const std::string& Formula::atom_name() const {
    if (node_->kind != Kind::Atom)
        throw std::logic_error("atom_name on non-atom");
    return node_->name;
}

Formula Formula::inner() const {
    if (node_->kind != Kind::Neg)
        throw std::logic_error("inner on non-negation");
    return Formula(node_->a);
}

Formula Formula::left() const {
    if (node_->kind != Kind::Conj)
        throw std::logic_error("left on non-conjunction");
    return Formula(node_->a);
}

Formula Formula::right() const {
    if (node_->kind != Kind::Conj)
        throw std::logic_error("right on non-conjunction");
    return Formula(node_->b);
}

namespace {

std::strong_ordering compare_nodes(const Formula& a, const Formula& b) {
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    switch (a.kind()) {
    case Formula::Kind::Atom:
        return a.atom_name() <=> b.atom_name();
    case Formula::Kind::Neg:
        return compare_nodes(a.inner(), b.inner());
    case Formula::Kind::Conj:
        if (auto c = compare_nodes(a.left(), b.left()); c != 0) return c;
        return compare_nodes(a.right(), b.right());
    }
    return std::strong_ordering::equal;
}

} // namespace

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    return compare_nodes(a, b) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    return compare_nodes(a, b);
}

std::size_t Formula::connective_count() const {
    switch (kind()) {
    case Kind::Atom: return 0;
    case Kind::Neg:  return 1 + inner().connective_count();
    case Kind::Conj: return 1 + left().connective_count() + right().connective_count();
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Concrete syntax

namespace {

class FormulaParser {
public:
    explicit FormulaParser(const std::string& text) : s_(text) {}

    Formula parse() {
        Formula f = conjunction();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected trailing input");
        return f;
    }

private:
    Formula conjunction() {
        Formula f = primary();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '&') {
                ++pos_;
                Formula r = primary();
                f = Formula::conj(std::move(f), std::move(r));
            } else {
                break;
            }
        }
        return f;
    }

    Formula primary() {
        skip_ws();
        if (pos_ >= s_.size())
            fail("expected formula");
        char c = s_[pos_];
        if (c == '~' || c == '!') {
            ++pos_;
            return Formula::neg(primary());
        }
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            Formula f = conjunction();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != ')')
                fail("unbalanced parenthesis", open);
            ++pos_;
            return f;
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            return atom();
        fail(std::string("unexpected character '") + c + "'");
    }

    Formula atom() {
        std::size_t start = pos_;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        return Formula::atom(s_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) {
        throw parse_error(what + " at position " + std::to_string(at + 1), at);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(const std::string& text) {
    return FormulaParser(text).parse();
}

std::string render_formula(const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::Atom:
        return f.atom_name();
    case Formula::Kind::Neg:
        return "(~" + render_formula(f.inner()) + ")";
    case Formula::Kind::Conj:
        return "(" + render_formula(f.left()) + " & " + render_formula(f.right()) + ")";
    }
    return {};
}

std::vector<std::string> atoms_of(const Formula& f) {
    std::set<std::string> names;
    auto walk = [&](auto&& self, const Formula& g) -> void {
        switch (g.kind()) {
        case Formula::Kind::Atom: names.insert(g.atom_name()); break;
        case Formula::Kind::Neg:  self(self, g.inner()); break;
        case Formula::Kind::Conj: self(self, g.left()); self(self, g.right()); break;
        }
    };
    walk(walk, f);
    return {names.begin(), names.end()};
}

// ---------------------------------------------------------------------------
// Truth semantics

void TruthAssignment::set(const std::string& atom, int bit) {
    if (bit != 0 && bit != 1)
        throw std::invalid_argument("truth value must be 0 or 1");
    bits_[atom] = bit;
}

std::optional<int> TruthAssignment::value(const std::string& atom) const {
    auto it = bits_.find(atom);
    if (it == bits_.end()) return std::nullopt;
    return it->second;
}

TruthAssignment TruthAssignment::from_row(const std::vector<std::string>& atoms,
                                          std::size_t row) {
    TruthAssignment g;
    std::size_t k = atoms.size();
    for (std::size_t i = 0; i < k; ++i)
        g.set(atoms[i], static_cast<int>((row >> (k - 1 - i)) & 1u));
    return g;
}

int eval_formula(const Formula& f, const TruthAssignment& g) {
    switch (f.kind()) {
    case Formula::Kind::Atom: {
        auto v = g.value(f.atom_name());
        if (!v)
            throw unbound_atom_error(f.atom_name());
        return *v;
    }
    case Formula::Kind::Neg:
        return 1 - eval_formula(f.inner(), g);
    case Formula::Kind::Conj:
        return eval_formula(f.left(), g) * eval_formula(f.right(), g);
    }
    return 0;
}

namespace {

std::vector<std::string> atoms_checked(const Formula& f, std::size_t limit) {
    auto atoms = atoms_of(f);
    if (atoms.size() > limit)
        throw atom_limit_error(atoms.size(), limit);
    return atoms;
}

} // namespace

std::vector<TableRow> truth_table(const Formula& f, std::size_t atom_limit) {
    auto atoms = atoms_checked(f, atom_limit);
    std::vector<TableRow> rows;
    std::size_t n = std::size_t{1} << atoms.size();
    rows.reserve(n);
    for (std::size_t row = 0; row < n; ++row) {
        TruthAssignment g = TruthAssignment::from_row(atoms, row);
        rows.push_back({g, eval_formula(f, g)});
    }
    return rows;
}

std::string truth_table_tsv(const Formula& f, std::size_t atom_limit) {
    auto atoms = atoms_checked(f, atom_limit);
    std::ostringstream out;
    for (const auto& a : atoms)
        out << a << '\t';
    out << "value\n";
    for (const auto& row : truth_table(f, atom_limit)) {
        for (const auto& a : atoms)
            out << *row.assignment.value(a) << '\t';
        out << row.value << '\n';
    }
    return out.str();
}

std::optional<TruthAssignment> find_countermodel(const Formula& f,
                                                 std::size_t atom_limit) {
    auto atoms = atoms_checked(f, atom_limit);
    std::size_t n = std::size_t{1} << atoms.size();
    for (std::size_t row = 0; row < n; ++row) {
        TruthAssignment g = TruthAssignment::from_row(atoms, row);
        if (eval_formula(f, g) == 0)
            return g;
    }
    return std::nullopt;
}

bool is_tautology(const Formula& f, std::size_t atom_limit) {
    return !find_countermodel(f, atom_limit).has_value();
}

Formula literal_form(const Formula& f, const TruthAssignment& g) {
    return eval_formula(f, g) == 1 ? f : Formula::neg(f);
}

} // namespace logicprob
