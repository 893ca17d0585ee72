#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "logicprob/deduction.hpp"
#include "logicprob/event.hpp"
#include "logicprob/formula.hpp"
#include "logicprob/generators.hpp"
#include "logicprob/model_io.hpp"
#include "logicprob/qnumber.hpp"
#include "logicprob/synthesis.hpp"
#include "set_expr.hpp"

using namespace logicprob;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsageError = 2;

// Thrown for verdicts like "not a tautology": the run worked, the answer is no.
struct domain_failure : std::runtime_error {
    explicit domain_failure(std::string msg, json payload = {})
        : std::runtime_error(std::move(msg)), payload(std::move(payload)) {}
    json payload;
};

// Thrown for malformed or out-of-range input.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    bool as_json = false;

    void emit(const json& doc, const std::string& text) const {
        if (as_json)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text;
    }
};

std::string read_payload(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    return arg;
}

std::string read_file_or_stdin(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw usage_error("cannot open file: " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw usage_error(std::string(flag) + ": " + e.what());
    }
}

json assignment_json(const TruthAssignment& g) {
    json j = json::object();
    for (const auto& [name, bit] : g.bindings())
        j[name] = bit;
    return j;
}

std::string assignment_text(const TruthAssignment& g) {
    std::string out;
    for (const auto& [name, bit] : g.bindings()) {
        if (!out.empty()) out += ' ';
        out += name + "=" + std::to_string(bit);
    }
    return out;
}

json violation_json(const Violation& v) {
    return json{{"step", v.step + 1}, {"rule", v.rule}, {"reason", v.reason}};
}

json report_json(const CheckReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"law", v.law}, {"detail", v.detail}});
    return json{{"trials", report.trials},
                {"checks", report.checks},
                {"violations", violations},
                {"ok", report.ok()}};
}

std::string report_text(const std::string& name, const CheckReport& report) {
    std::ostringstream out;
    out << name << ": " << report.checks << " checks over " << report.trials
        << " trials, " << report.violations.size() << " violations\n";
    for (const auto& v : report.violations)
        out << "  " << v.law << ": " << v.detail << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Formula commands

int cmd_parse(const Output& out, const std::string& input) {
    Formula f = parse_formula(read_payload(input));
    json doc{{"command", "parse"},
             {"formula", render_formula(f)},
             {"atoms", atoms_of(f)}};
    out.emit(doc, render_formula(f) + "\n");
    return kOk;
}

int cmd_table(const Output& out, const std::string& input, std::size_t max_atoms) {
    Formula f = parse_formula(read_payload(input));
    std::string tsv = truth_table_tsv(f, max_atoms);
    if (out.as_json) {
        json rows = json::array();
        for (const auto& row : truth_table(f, max_atoms)) {
            json bits = json::array();
            for (const auto& name : atoms_of(f))
                bits.push_back(*row.assignment.value(name));
            rows.push_back({{"bits", bits}, {"value", row.value}});
        }
        out.emit(json{{"command", "table"},
                      {"formula", render_formula(f)},
                      {"atoms", atoms_of(f)},
                      {"rows", rows}},
                 "");
    } else {
        std::cout << tsv;
    }
    return kOk;
}

int cmd_tauto(const Output& out, const std::string& input, std::size_t max_atoms) {
    Formula f = parse_formula(read_payload(input));
    auto counter = find_countermodel(f, max_atoms);
    if (!counter) {
        out.emit(json{{"command", "tauto"},
                      {"formula", render_formula(f)},
                      {"tautology", true}},
                 "tautology\n");
        return kOk;
    }
    throw domain_failure("not a tautology; counterexample: " + assignment_text(*counter),
                         json{{"command", "tauto"},
                              {"formula", render_formula(f)},
                              {"tautology", false},
                              {"counterexample", assignment_json(*counter)}});
}

std::string trace_text(const SynthesisTrace& trace) {
    std::ostringstream out;
    out << "assignments: " << trace.assignment_count << " over";
    for (const auto& a : trace.atoms) out << ' ' << a;
    out << "\n";
    for (std::size_t row = 0; row < trace.assignment_proofs.size(); ++row) {
        TruthAssignment g = TruthAssignment::from_row(trace.atoms, row);
        out << "  " << assignment_text(g) << " -> "
            << render_sequent(trace.assignment_proofs[row].steps.back().sequent)
            << " (" << trace.assignment_proofs[row].steps.size() << " steps)\n";
    }
    for (const auto& round : trace.rounds) {
        out << "eliminate " << round.atom << ": " << round.merged.size() << " merge(s)\n";
        for (const auto& p : round.merged)
            out << "  -> " << render_sequent(p.steps.back().sequent) << " ("
                << p.steps.size() << " steps)\n";
    }
    return out.str();
}

json trace_json(const SynthesisTrace& trace) {
    json assignments = json::array();
    for (std::size_t row = 0; row < trace.assignment_proofs.size(); ++row) {
        TruthAssignment g = TruthAssignment::from_row(trace.atoms, row);
        assignments.push_back(
            {{"assignment", assignment_json(g)},
             {"conclusion", render_sequent(trace.assignment_proofs[row].steps.back().sequent)},
             {"steps", trace.assignment_proofs[row].steps.size()}});
    }
    json rounds = json::array();
    for (const auto& round : trace.rounds) {
        json merged = json::array();
        for (const auto& p : round.merged)
            merged.push_back({{"conclusion", render_sequent(p.steps.back().sequent)},
                              {"steps", p.steps.size()}});
        rounds.push_back({{"atom", round.atom}, {"merged", merged}});
    }
    return json{{"atoms", trace.atoms},
                {"assignment_count", trace.assignment_count},
                {"assignments", assignments},
                {"rounds", rounds}};
}

int cmd_prove(const Output& out, const std::string& input, std::size_t max_atoms,
              bool with_trace) {
    Formula f = parse_formula(read_payload(input));
    try {
        SynthesisResult result = prove_tautology(f, max_atoms);
        std::string proof_text = render_proof(result.proof);
        if (out.as_json) {
            json lines = json::array();
            std::istringstream in(proof_text);
            std::string line;
            while (std::getline(in, line)) lines.push_back(line);
            json doc{{"command", "prove"},
                     {"formula", render_formula(f)},
                     {"proof", lines},
                     {"steps", result.proof.steps.size()}};
            if (with_trace)
                doc["trace"] = trace_json(result.trace);
            out.emit(doc, "");
        } else {
            std::cout << proof_text;
            if (with_trace)
                std::cerr << trace_text(result.trace);
        }
        return kOk;
    } catch (const not_tautology_error& e) {
        throw domain_failure(
            "not a tautology; counterexample: " + assignment_text(e.counterexample),
            json{{"command", "prove"},
                 {"formula", render_formula(f)},
                 {"tautology", false},
                 {"counterexample", assignment_json(e.counterexample)}});
    }
}

int cmd_check(const Output& out, const std::string& path) {
    Proof proof = parse_proof(read_file_or_stdin(path));
    if (auto v = check_proof(proof)) {
        throw domain_failure("step " + std::to_string(v->step + 1) + " (" + v->rule +
                                 "): " + v->reason,
                             json{{"command", "check"},
                                  {"ok", false},
                                  {"violation", violation_json(*v)}});
    }
    const Sequent& c = proof.steps.back().sequent;
    out.emit(json{{"command", "check"},
                  {"ok", true},
                  {"steps", proof.steps.size()},
                  {"conclusion", render_sequent(c)}},
             "ok: " + render_sequent(c) + "\n");
    return kOk;
}

// ---------------------------------------------------------------------------
// Probability commands

int cmd_bernoulli(const Output& out, std::size_t r, std::size_t k, const Rational& p) {
    if (k > r)
        throw usage_error("--k must not exceed --r");
    Rational value = bernoulli_pmf(r, k, p);
    out.emit(json{{"command", "bernoulli"},
                  {"r", r},
                  {"k", k},
                  {"p", p.str()},
                  {"value", value.str()},
                  {"decimal", value.to_double()}},
             value.str() + "\n");
    return kOk;
}

int cmd_tail(const Output& out, std::size_t r, const Rational& a, const Rational& b,
             const Rational& p) {
    Rational value = binomial_tail(r, a, b, p);
    KRange range = f_bounds(r, a, b);
    if (range.clipped_low)
        std::cerr << "note: lower bound clipped to 0\n";
    if (range.clipped_high)
        std::cerr << "note: upper bound clipped to " << r << "\n";
    out.emit(json{{"command", "tail"},
                  {"r", r},
                  {"a", a.str()},
                  {"b", b.str()},
                  {"p", p.str()},
                  {"k_low", range.empty ? json() : json(range.k)},
                  {"k_high", range.empty ? json() : json(range.l)},
                  {"value", value.str()},
                  {"decimal", value.to_double()}},
             value.str() + "\n");
    return kOk;
}

int cmd_bound(const Output& out, std::size_t r, const Rational& p, const Rational& eps) {
    Rational value = lln_bound(r, p, eps);
    out.emit(json{{"command", "bound"},
                  {"r", r},
                  {"p", p.str()},
                  {"eps", eps.str()},
                  {"value", value.str()},
                  {"decimal", value.to_double()}},
             value.str() + "\n");
    return kOk;
}

int cmd_series(const Output& out, std::size_t r, std::size_t k, const Rational& p) {
    TestScheme scheme("A", r, p);
    auto members = series_members(scheme, r, k);
    if (out.as_json) {
        json list = json::array();
        for (const auto& m : members)
            list.push_back(render_event(m));
        out.emit(json{{"command", "series"},
                      {"r", r},
                      {"k", k},
                      {"count", members.size()},
                      {"members", list}},
                 "");
    } else {
        for (const auto& m : members)
            std::cout << render_event(m) << "\n";
    }
    return kOk;
}

int cmd_verify_b(const Output& out, const std::string& model_path, std::size_t trials,
                 std::uint64_t seed) {
    ProbModel model = load_model(read_file_or_stdin(model_path));
    CheckReport report = verify_b_identities(model, trials, seed);
    json doc = report_json(report);
    doc["command"] = "verify-b";
    if (!report.ok())
        throw domain_failure(report_text("verify-b", report), doc);
    out.emit(doc, report_text("verify-b", report));
    return kOk;
}

// ---------------------------------------------------------------------------
// Nonstandard commands

int cmd_qdemo_density(const Output& out, const std::string& expr) {
    IndexSet s = cli::parse_set_expr(expr);
    Rational d = density(s);
    bool member = in_filter(s);
    out.emit(json{{"command", "qdemo.density"},
                  {"set", render_index_set(s)},
                  {"density", d.str()},
                  {"in_filter", member}},
             "density " + d.str() + (member ? " (in filter)" : " (not in filter)") + "\n");
    return kOk;
}

int cmd_qdemo_freq(const Output& out, const std::string& expr, long n) {
    IndexSet s = cli::parse_set_expr(expr);
    Rational f = freq(s, n);
    out.emit(json{{"command", "qdemo.freq"},
                  {"set", render_index_set(s)},
                  {"n", n},
                  {"freq", f.str()}},
             f.str() + "\n");
    return kOk;
}

int cmd_qdemo_classify(const Output& out, const std::string& expr) {
    SeqReal s = cli::parse_seq_expr(expr);
    Classification c = classify(QNumber(s));
    std::string text = qclass_name(c.kind);
    if (c.value)
        text += " " + c.value->str();
    text += "\n";
    json doc{{"command", "qdemo.classify"},
             {"sequence", s.str()},
             {"class", qclass_name(c.kind)}};
    if (c.value)
        doc["value"] = c.value->str();
    // For the plain a/n shape, show the tail witness: with k the least
    // natural above |a|, every n > m*k has |a/n| < 1/m, and that tail set has
    // prefix frequency (n - m*k)/n, which tends to 1.
    if (c.kind == QClass::Infinitesimal && s.num().degree() == 0 &&
        s.den() == Poly::identity()) {
        long witness = s.num().coeffs()[0].abs().floor_long() + 1;
        doc["tail_witness_k"] = witness;
        text += "tail witness: k = " + std::to_string(witness) +
                "; for every m, the tail set {n | n > m*k} has frequency (n - m*k)/n -> 1\n";
    }
    out.emit(doc, text);
    return kOk;
}

int cmd_qdemo_near(const Output& out, const std::string& e1, const std::string& e2) {
    QNumber a{cli::parse_seq_expr(e1)};
    QNumber b{cli::parse_seq_expr(e2)};
    bool near = infinitely_near(a, b);
    out.emit(json{{"command", "qdemo.near"},
                  {"lhs", a.rep().str()},
                  {"rhs", b.rep().str()},
                  {"near", near}},
             near ? "infinitely near\n" : "not infinitely near\n");
    return kOk;
}

// ---------------------------------------------------------------------------
// Self test

int cmd_selftest(const Output& out, std::size_t scale) {
    struct Suite {
        std::string name;
        std::size_t checks = 0;
        std::vector<std::string> failures;
    };
    std::vector<Suite> suites;

    {
        Suite s{"formula-round-trip"};
        std::mt19937_64 rng(101);
        std::vector<std::string> pool{"A", "B", "C", "D"};
        for (std::size_t i = 0; i < scale; ++i) {
            Formula f = random_formula(rng, pool, 7);
            ++s.checks;
            if (!(parse_formula(render_formula(f)) == f))
                s.failures.push_back("round trip broke on " + render_formula(f));
        }
        suites.push_back(std::move(s));
    }
    {
        Suite s{"completeness-round-trip"};
        std::mt19937_64 rng(102);
        std::vector<std::string> pool{"A", "B", "C"};
        for (std::size_t i = 0; i < scale / 3 + 10; ++i) {
            Formula f = random_formula(rng, pool, 5);
            ++s.checks;
            bool taut = is_tautology(f);
            try {
                SynthesisResult result = prove_tautology(f);
                Proof reparsed = parse_proof(render_proof(result.proof));
                if (!taut)
                    s.failures.push_back("proved a non-tautology " + render_formula(f));
                else if (check_proof(reparsed) || !conclusion_of(reparsed).hypotheses.empty())
                    s.failures.push_back("bad proof for " + render_formula(f));
            } catch (const not_tautology_error&) {
                if (taut)
                    s.failures.push_back("failed to prove " + render_formula(f));
            }
        }
        suites.push_back(std::move(s));
    }
    {
        Suite s{"b-function-identities"};
        ProbModel model = ProbModel::product({{"A", Rational(1, 2)},
                                              {"B", Rational(1, 3)},
                                              {"C", Rational(1, 4)}});
        CheckReport report = verify_b_identities(model, scale);
        s.checks = report.checks;
        for (const auto& v : report.violations)
            s.failures.push_back(v.law + ": " + v.detail);
        suites.push_back(std::move(s));
    }
    {
        Suite s{"filter-laws"};
        CheckReport report = filter_laws_check(scale);
        s.checks = report.checks;
        for (const auto& v : report.violations)
            s.failures.push_back(v.law + ": " + v.detail);
        suites.push_back(std::move(s));
    }
    {
        Suite s{"boolean-restriction"};
        ProbModel model = ProbModel::product(
            {{"A", Rational(1)}, {"B", Rational(0)}, {"C", Rational(1)}});
        CheckReport report = boolean_restriction_check(model, scale);
        s.checks = report.checks;
        for (const auto& v : report.violations)
            s.failures.push_back(v.law + ": " + v.detail);
        suites.push_back(std::move(s));
    }

    bool ok = true;
    std::ostringstream text;
    json jsuites = json::array();
    for (const auto& s : suites) {
        ok = ok && s.failures.empty();
        text << (s.failures.empty() ? "ok   " : "FAIL ") << s.name << " (" << s.checks
             << " checks)\n";
        for (const auto& f : s.failures)
            text << "     " << f << "\n";
        jsuites.push_back({{"name", s.name},
                           {"checks", s.checks},
                           {"ok", s.failures.empty()},
                           {"failures", s.failures}});
    }
    json doc{{"command", "selftest"}, {"ok", ok}, {"suites", jsuites}};
    if (!ok)
        throw domain_failure(text.str(), doc);
    out.emit(doc, text.str());
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Propositional deduction, exact event probability and "
                 "density-filter nonstandard arithmetic"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string formula_arg;
    std::size_t max_atoms = kDefaultTableAtomLimit;
    std::size_t prove_atoms = kDefaultProveAtomLimit;
    bool with_trace = false;

    auto* parse_cmd = app.add_subcommand("parse", "Parse a formula and print its canonical form");
    parse_cmd->add_option("formula", formula_arg, "Formula text ('-' reads stdin)")->required();

    auto* table_cmd = app.add_subcommand("table", "Print the truth table as TSV");
    table_cmd->add_option("formula", formula_arg)->required();
    table_cmd->add_option("--max-atoms", max_atoms, "Atom limit for the enumeration");

    auto* tauto_cmd = app.add_subcommand("tauto", "Decide whether a formula is a tautology");
    tauto_cmd->add_option("formula", formula_arg)->required();
    tauto_cmd->add_option("--max-atoms", max_atoms);

    auto* prove_cmd = app.add_subcommand("prove", "Synthesize a natural deduction for a tautology");
    prove_cmd->add_option("formula", formula_arg)->required();
    prove_cmd->add_option("--max-atoms", prove_atoms);
    prove_cmd->add_flag("--trace", with_trace, "Also print the synthesis trace (stderr)");

    std::string proof_path;
    auto* check_cmd = app.add_subcommand("check", "Check a proof in the step-per-line format");
    check_cmd->add_option("proof", proof_path, "Proof file ('-' reads stdin)")->required();

    std::size_t r = 0, k = 0;
    std::string p_text = "1/2", a_text, b_text, eps_text;
    auto* bern_cmd = app.add_subcommand("bernoulli", "Exact probability of k successes in r trials");
    bern_cmd->add_option("--r", r)->required();
    bern_cmd->add_option("--k", k)->required();
    bern_cmd->add_option("--p", p_text)->required();

    auto* tail_cmd = app.add_subcommand("tail", "Exact probability of a success-count window");
    tail_cmd->add_option("--r", r)->required();
    tail_cmd->add_option("--a", a_text)->required();
    tail_cmd->add_option("--b", b_text)->required();
    tail_cmd->add_option("--p", p_text)->required();

    auto* bound_cmd = app.add_subcommand("bound", "Deviation bound 1 - p(1-p)/(r eps^2)");
    bound_cmd->add_option("--r", r)->required();
    bound_cmd->add_option("--p", p_text)->required();
    bound_cmd->add_option("--eps", eps_text)->required();

    auto* series_cmd = app.add_subcommand("series", "List the k-success products of r trials");
    series_cmd->add_option("--r", r)->required();
    series_cmd->add_option("--k", k)->required();
    series_cmd->add_option("--p", p_text);

    std::string model_path;
    std::size_t trials = 1000;
    std::uint64_t seed = kDefaultCheckSeed;
    auto* verify_cmd = app.add_subcommand("verify-b", "Run the additivity-law suite on a model");
    verify_cmd->add_option("--model", model_path, "Model JSON file ('-' reads stdin)")->required();
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed);

    auto* qdemo_cmd = app.add_subcommand("qdemo", "Density-filter demos");
    qdemo_cmd->require_subcommand(1);
    std::string set_expr_text, seq1_text, seq2_text;
    long freq_n = 1;
    auto* qd_density = qdemo_cmd->add_subcommand("density", "Natural density of an index set");
    qd_density->add_option("set", set_expr_text, "e.g. \"res 0 2\" or \"and (thr 5) (res 1 3)\"")->required();
    auto* qd_freq = qdemo_cmd->add_subcommand("freq", "Prefix frequency of an index set");
    qd_freq->add_option("set", set_expr_text)->required();
    qd_freq->add_option("n", freq_n)->required()->check(CLI::PositiveNumber);
    auto* qd_classify = qdemo_cmd->add_subcommand("classify", "Classify a sequence's number");
    qd_classify->add_option("seq", seq1_text, "e.g. \"ratfn 1 0 / 0 1\" for 1/n")->required();
    auto* qd_near = qdemo_cmd->add_subcommand("near", "Are two sequences infinitely near?");
    qd_near->add_option("lhs", seq1_text)->required();
    qd_near->add_option("rhs", seq2_text)->required();

    std::size_t selftest_scale = 200;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in verification suites");
    selftest_cmd->add_option("--trials", selftest_scale, "Scale of each suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    Output out{format == "json"};

    try {
        if (*parse_cmd) return cmd_parse(out, formula_arg);
        if (*table_cmd) return cmd_table(out, formula_arg, max_atoms);
        if (*tauto_cmd) return cmd_tauto(out, formula_arg, max_atoms);
        if (*prove_cmd) return cmd_prove(out, formula_arg, prove_atoms, with_trace);
        if (*check_cmd) return cmd_check(out, proof_path);
        if (*bern_cmd)
            return cmd_bernoulli(out, r, k, parse_rational_flag(p_text, "--p"));
        if (*tail_cmd)
            return cmd_tail(out, r, parse_rational_flag(a_text, "--a"),
                            parse_rational_flag(b_text, "--b"),
                            parse_rational_flag(p_text, "--p"));
        if (*bound_cmd)
            return cmd_bound(out, r, parse_rational_flag(p_text, "--p"),
                             parse_rational_flag(eps_text, "--eps"));
        if (*series_cmd)
            return cmd_series(out, r, k, parse_rational_flag(p_text, "--p"));
        if (*verify_cmd) return cmd_verify_b(out, model_path, trials, seed);
        if (*qd_density) return cmd_qdemo_density(out, set_expr_text);
        if (*qd_freq) return cmd_qdemo_freq(out, set_expr_text, freq_n);
        if (*qd_classify) return cmd_qdemo_classify(out, seq1_text);
        if (*qd_near) return cmd_qdemo_near(out, seq1_text, seq2_text);
        if (*selftest_cmd) return cmd_selftest(out, selftest_scale);
        std::cerr << "usage error: no subcommand\n";
        return kUsageError;
    } catch (const domain_failure& e) {
        if (out.as_json && !e.payload.is_null())
            std::cout << e.payload.dump(2) << "\n";
        else
            std::cout << e.what() << (std::string(e.what()).back() == '\n' ? "" : "\n");
        return kDomainFailure;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const proof_parse_error& e) {
        std::cerr << "proof parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const cli::expr_error& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return kUsageError;
    } catch (const atom_limit_error& e) {
        std::cerr << "limit error: " << e.what() << " (raise --max-atoms)\n";
        return kUsageError;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const model_error& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return kUsageError;
    } catch (const qnumber_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
}
