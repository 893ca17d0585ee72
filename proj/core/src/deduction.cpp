#include "logicprob/deduction.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace logicprob {

const char* rule_name(const Justification& j) {
    struct Visitor {
        const char* operator()(const rules::Axiom&) const { return "AX"; }
        const char* operator()(const rules::RConjLeft&) const { return "R&L"; }
        const char* operator()(const rules::RConjRight&) const { return "R&R"; }
        const char* operator()(const rules::IConj&) const { return "I&"; }
        const char* operator()(const rules::RNeg&) const { return "R~"; }
        const char* operator()(const rules::INeg&) const { return "I~"; }
    };
    return std::visit(Visitor{}, j);
}

bool operator==(const Proof& a, const Proof& b) {
    if (a.steps.size() != b.steps.size()) return false;
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        if (!(a.steps[i].sequent == b.steps[i].sequent)) return false;
        if (a.steps[i].rule.index() != b.steps[i].rule.index()) return false;
    }
    // Same shape; compare justification payloads via rendering-equivalent data.
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        const auto& x = a.steps[i].rule;
        const auto& y = b.steps[i].rule;
        bool same = std::visit(
            [&](const auto& xv) {
                using T = std::decay_t<decltype(xv)>;
                const auto& yv = std::get<T>(y);
                if constexpr (std::is_same_v<T, rules::Axiom>) { (void)xv; (void)yv; return true; }
                else if constexpr (std::is_same_v<T, rules::RConjLeft> ||
                                   std::is_same_v<T, rules::RConjRight> ||
                                   std::is_same_v<T, rules::RNeg>)
                    return xv.premise == yv.premise;
                else if constexpr (std::is_same_v<T, rules::IConj>)
                    return xv.left == yv.left && xv.right == yv.right;
                else
                    return xv.pos == yv.pos && xv.neg == yv.neg &&
                           xv.discharged == yv.discharged;
            },
            x);
        if (!same) return false;
    }
    return true;
}

namespace {

std::set<Formula> set_minus(std::set<Formula> s, const Formula& f) {
    s.erase(f);
    return s;
}

std::set<Formula> set_union(const std::set<Formula>& a, const std::set<Formula>& b) {
    std::set<Formula> r = a;
    r.insert(b.begin(), b.end());
    return r;
}

struct StepChecker {
    const Proof& proof;
    std::size_t index;

    std::optional<Violation> bad(const char* rule, std::string reason) const {
        return Violation{index, rule, std::move(reason)};
    }

    std::optional<Violation> premise_in_range(const char* rule, std::size_t p) const {
        if (p >= index)
            return bad(rule, "premise " + std::to_string(p + 1) +
                                 " does not precede step " + std::to_string(index + 1));
        return std::nullopt;
    }

    const Sequent& here() const { return proof.steps[index].sequent; }
    const Sequent& at(std::size_t p) const { return proof.steps[p].sequent; }

    std::optional<Violation> operator()(const rules::Axiom&) const {
        const Sequent& s = here();
        if (s.hypotheses.size() != 1 || *s.hypotheses.begin() != s.conclusion)
            return bad("AX", "axiom requires hypotheses { C } with conclusion C");
        return std::nullopt;
    }

    std::optional<Violation> check_rconj(const char* rule, std::size_t premise,
                                         bool left) const {
        if (auto v = premise_in_range(rule, premise)) return v;
        const Sequent& prem = at(premise);
        const Sequent& s = here();
        if (!prem.conclusion.is_conj())
            return bad(rule, "premise conclusion is not a conjunction");
        Formula want = left ? prem.conclusion.left() : prem.conclusion.right();
        if (s.conclusion != want)
            return bad(rule, std::string("conclusion is not the ") +
                                 (left ? "left" : "right") + " conjunct of the premise");
        if (s.hypotheses != prem.hypotheses)
            return bad(rule, "hypotheses differ from the premise's");
        return std::nullopt;
    }

    std::optional<Violation> operator()(const rules::RConjLeft& r) const {
        return check_rconj("R&L", r.premise, true);
    }
    std::optional<Violation> operator()(const rules::RConjRight& r) const {
        return check_rconj("R&R", r.premise, false);
    }

    std::optional<Violation> operator()(const rules::IConj& r) const {
        if (auto v = premise_in_range("I&", r.left)) return v;
        if (auto v = premise_in_range("I&", r.right)) return v;
        const Sequent& s = here();
        if (!s.conclusion.is_conj())
            return bad("I&", "conclusion is not a conjunction");
        if (at(r.left).conclusion != s.conclusion.left())
            return bad("I&", "first premise does not conclude the left conjunct");
        if (at(r.right).conclusion != s.conclusion.right())
            return bad("I&", "second premise does not conclude the right conjunct");
        if (s.hypotheses != set_union(at(r.left).hypotheses, at(r.right).hypotheses))
            return bad("I&", "hypotheses are not the union of the premises'");
        return std::nullopt;
    }

    std::optional<Violation> operator()(const rules::RNeg& r) const {
        if (auto v = premise_in_range("R~", r.premise)) return v;
        const Sequent& prem = at(r.premise);
        const Sequent& s = here();
        if (prem.conclusion != Formula::neg(Formula::neg(s.conclusion)))
            return bad("R~", "premise is not the double negation of the conclusion");
        if (s.hypotheses != prem.hypotheses)
            return bad("R~", "hypotheses differ from the premise's");
        return std::nullopt;
    }

    std::optional<Violation> operator()(const rules::INeg& r) const {
        if (auto v = premise_in_range("I~", r.pos)) return v;
        if (auto v = premise_in_range("I~", r.neg)) return v;
        const Sequent& pos = at(r.pos);
        const Sequent& neg = at(r.neg);
        const Sequent& s = here();
        if (neg.conclusion != Formula::neg(pos.conclusion))
            return bad("I~", "premises do not conclude A and (~A)");
        if (s.conclusion != Formula::neg(r.discharged))
            return bad("I~", "conclusion is not the negation of the discharged formula");
        if (s.hypotheses != set_union(set_minus(pos.hypotheses, r.discharged),
                                      set_minus(neg.hypotheses, r.discharged)))
            return bad("I~", "hypotheses are not the union of the premises' minus the discharged formula");
        return std::nullopt;
    }
};

} // namespace

std::optional<Violation> check_step(const Proof& proof, std::size_t index) {
    if (index >= proof.steps.size())
        return Violation{index, "", "step index out of range"};
    return std::visit(StepChecker{proof, index}, proof.steps[index].rule);
}

std::optional<Violation> check_proof(const Proof& proof) {
    if (proof.steps.empty())
        return Violation{0, "", "empty proof"};
    for (std::size_t i = 0; i < proof.steps.size(); ++i)
        if (auto v = check_step(proof, i))
            return v;
    return std::nullopt;
}

const Sequent& conclusion_of(const Proof& proof) {
    if (auto v = check_proof(proof))
        throw proof_error("invalid proof at step " + std::to_string(v->step + 1) +
                          ": " + v->reason);
    return proof.steps.back().sequent;
}

// ---------------------------------------------------------------------------
// Text format

std::string render_sequent(const Sequent& s) {
    std::string out;
    bool first = true;
    for (const auto& h : s.hypotheses) {
        if (!first) out += ", ";
        out += render_formula(h);
        first = false;
    }
    if (!out.empty()) out += ' ';
    out += "|- " + render_formula(s.conclusion);
    return out;
}

std::string render_proof(const Proof& proof) {
    std::ostringstream out;
    for (std::size_t i = 0; i < proof.steps.size(); ++i) {
        const auto& step = proof.steps[i];
        out << (i + 1) << ". " << render_sequent(step.sequent) << " ; ";
        std::visit(
            [&](const auto& r) {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, rules::Axiom>)
                    out << "AX";
                else if constexpr (std::is_same_v<T, rules::RConjLeft>)
                    out << "R&L " << (r.premise + 1);
                else if constexpr (std::is_same_v<T, rules::RConjRight>)
                    out << "R&R " << (r.premise + 1);
                else if constexpr (std::is_same_v<T, rules::IConj>)
                    out << "I& " << (r.left + 1) << ' ' << (r.right + 1);
                else if constexpr (std::is_same_v<T, rules::RNeg>)
                    out << "R~ " << (r.premise + 1);
                else
                    out << "I~ " << (r.pos + 1) << ' ' << (r.neg + 1) << ' '
                        << render_formula(r.discharged);
            },
            step.rule);
        out << '\n';
    }
    return out.str();
}

namespace {

struct LineParser {
    std::string line;
    std::size_t lineno;

    [[noreturn]] void fail(const std::string& what) const {
        throw proof_parse_error("line " + std::to_string(lineno) + ": " + what, lineno);
    }

    static std::string trim(std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.pop_back();
        return s;
    }

    std::size_t parse_index(const std::string& tok) const {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            fail("expected a step number, got '" + tok + "'");
        std::size_t n = 0;
        try {
            n = std::stoul(tok);
        } catch (const std::out_of_range&) {
            fail("step number out of range: '" + tok + "'");
        }
        if (n == 0) fail("step numbers are 1-based");
        return n - 1;
    }

    ProofStep parse(std::size_t expected_number) {
        auto dot = line.find('.');
        if (dot == std::string::npos) fail("missing step number");
        std::size_t number = parse_index(trim(line.substr(0, dot)));
        if (number != expected_number)
            fail("step numbered " + std::to_string(number + 1) + ", expected " +
                 std::to_string(expected_number + 1));

        std::string rest = line.substr(dot + 1);
        auto turnstile = rest.find("|-");
        if (turnstile == std::string::npos) fail("missing '|-'");
        auto semi = rest.rfind(';');
        if (semi == std::string::npos || semi < turnstile) fail("missing '; <rule>'");

        Sequent seq{std::set<Formula>{}, parse_conclusion(rest, turnstile, semi)};
        parse_hypotheses(rest.substr(0, turnstile), seq.hypotheses);
        Justification rule = parse_rule(trim(rest.substr(semi + 1)));
        return ProofStep{std::move(seq), std::move(rule)};
    }

    Formula parse_conclusion(const std::string& rest, std::size_t turnstile,
                             std::size_t semi) const {
        std::string text = trim(rest.substr(turnstile + 2, semi - turnstile - 2));
        if (text.empty()) fail("missing conclusion");
        return parse_line_formula(text);
    }

    void parse_hypotheses(const std::string& text, std::set<Formula>& out) const {
        std::string t = trim(text);
        if (t.empty()) return;
        std::size_t start = 0;
        while (start <= t.size()) {
            auto comma = t.find(',', start);
            std::string piece = trim(comma == std::string::npos
                                         ? t.substr(start)
                                         : t.substr(start, comma - start));
            if (piece.empty()) fail("empty hypothesis");
            out.insert(parse_line_formula(piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }

    Formula parse_line_formula(const std::string& text) const {
        try {
            return parse_formula(text);
        } catch (const parse_error& e) {
            fail(std::string("bad formula '") + text + "': " + e.what());
        }
    }

    Justification parse_rule(const std::string& text) const {
        std::istringstream in(text);
        std::string name;
        in >> name;
        auto index_arg = [&]() {
            std::string tok;
            if (!(in >> tok)) fail("rule '" + name + "' is missing a premise index");
            return parse_index(tok);
        };
        if (name == "AX") {
            ensure_done(in, name);
            return rules::Axiom{};
        }
        if (name == "R&L") {
            auto p = index_arg();
            ensure_done(in, name);
            return rules::RConjLeft{p};
        }
        if (name == "R&R") {
            auto p = index_arg();
            ensure_done(in, name);
            return rules::RConjRight{p};
        }
        if (name == "I&") {
            auto l = index_arg();
            auto r = index_arg();
            ensure_done(in, name);
            return rules::IConj{l, r};
        }
        if (name == "R~") {
            auto p = index_arg();
            ensure_done(in, name);
            return rules::RNeg{p};
        }
        if (name == "I~") {
            auto pos = index_arg();
            auto neg = index_arg();
            std::string formula_text;
            std::getline(in, formula_text);
            formula_text = trim(formula_text);
            if (formula_text.empty()) fail("I~ is missing the discharged formula");
            return rules::INeg{pos, neg, parse_line_formula(formula_text)};
        }
        fail("unknown rule '" + name + "'");
    }

    void ensure_done(std::istringstream& in, const std::string& name) const {
        std::string extra;
        if (in >> extra) fail("unexpected trailing '" + extra + "' after rule " + name);
    }
};

} // namespace

Proof parse_proof(const std::string& text) {
    Proof proof;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = LineParser::trim(line);
        if (trimmed.empty()) continue;
        LineParser p{trimmed, lineno};
        proof.steps.push_back(p.parse(proof.steps.size()));
    }
    if (proof.steps.empty())
        throw proof_parse_error("no proof steps in input", 0);
    return proof;
}

} // namespace logicprob
