#include "set_expr.hpp"

#include <cctype>
#include <vector>

namespace logicprob::cli {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(current);
            current.clear();
        }
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else if (c == '(' || c == ')') {
            flush();
            tokens.push_back(std::string(1, c));
        } else {
            current += c;
        }
    }
    flush();
    return tokens;
}

bool looks_numeric(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i >= tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])) && tok[i] != '/' &&
            tok[i] != '.')
            return false;
    return true;
}

class Cursor {
public:
    explicit Cursor(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

    bool done() const { return pos_ >= tokens_.size(); }
    const std::string& peek() const {
        if (done()) throw expr_error("unexpected end of expression");
        return tokens_[pos_];
    }
    std::string next() {
        std::string t = peek();
        ++pos_;
        return t;
    }
    void expect(const std::string& tok) {
        if (done() || tokens_[pos_] != tok)
            throw expr_error("expected '" + tok + "'");
        ++pos_;
    }

    long next_long() {
        std::string t = next();
        try {
            std::size_t used = 0;
            long v = std::stol(t, &used);
            if (used != t.size()) throw expr_error("");
            return v;
        } catch (...) {
            throw expr_error("expected an integer, got '" + t + "'");
        }
    }

    Rational next_rational() {
        std::string t = next();
        try {
            return Rational::parse(t);
        } catch (const std::exception&) {
            throw expr_error("expected a rational, got '" + t + "'");
        }
    }

private:
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
};

IndexSet parse_set(Cursor& in) {
    std::string head = in.next();
    if (head == "(") {
        IndexSet s = parse_set(in);
        in.expect(")");
        return s;
    }
    if (head == "N") return IndexSet::naturals();
    if (head == "empty") return IndexSet::none();
    if (head == "res") {
        long a = in.next_long();
        long m = in.next_long();
        return IndexSet::residue(a, m);
    }
    if (head == "thr") return IndexSet::threshold(in.next_long());
    if (head == "fin" || head == "cofin") {
        std::set<long> elems;
        while (!in.done() && looks_numeric(in.peek()))
            elems.insert(in.next_long());
        return head == "fin" ? IndexSet::finite(std::move(elems))
                             : IndexSet::cofinite(std::move(elems));
    }
    if (head == "and") {
        IndexSet a = parse_set(in);
        return IndexSet::intersect(std::move(a), parse_set(in));
    }
    if (head == "or") {
        IndexSet a = parse_set(in);
        return IndexSet::unite(std::move(a), parse_set(in));
    }
    if (head == "not") return IndexSet::complement(parse_set(in));
    throw expr_error("unknown set form '" + head + "'");
}

SeqReal parse_seq(Cursor& in) {
    std::string head = in.next();
    if (head == "(") {
        SeqReal s = parse_seq(in);
        in.expect(")");
        return s;
    }
    if (head == "const") return SeqReal::constant(in.next_rational());
    if (head == "id") return SeqReal::identity();
    if (head == "ratfn") {
        std::vector<Rational> num, den;
        while (!in.done() && in.peek() != "/")
            num.push_back(in.next_rational());
        in.expect("/");
        while (!in.done() && looks_numeric(in.peek()))
            den.push_back(in.next_rational());
        if (den.empty())
            throw expr_error("ratfn needs denominator coefficients");
        return SeqReal::rational_function(Poly(std::move(num)), Poly(std::move(den)));
    }
    if (head == "patch") {
        long n = in.next_long();
        Rational v = in.next_rational();
        return SeqReal::patch(parse_seq(in), n, std::move(v));
    }
    throw expr_error("unknown sequence form '" + head + "'");
}

} // namespace

IndexSet parse_set_expr(const std::string& text) {
    Cursor in(tokenize(text));
    IndexSet s = parse_set(in);
    if (!in.done())
        throw expr_error("unexpected trailing '" + in.peek() + "'");
    return s;
}

SeqReal parse_seq_expr(const std::string& text) {
    Cursor in(tokenize(text));
    SeqReal s = parse_seq(in);
    if (!in.done())
        throw expr_error("unexpected trailing '" + in.peek() + "'");
    return s;
}

} // namespace logicprob::cli
