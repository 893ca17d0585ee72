#include <benchmark/benchmark.h>

#include "logicprob/event.hpp"
#include "logicprob/formula.hpp"
#include "logicprob/qnumber.hpp"
#include "logicprob/synthesis.hpp"

using namespace logicprob;

namespace {

const char* kFormula = "(~((~(A & (~C))) & ((A & B) & (~C))))";

void BM_ParseFormula(benchmark::State& state) {
    for (auto _ : state) {
        Formula f = parse_formula(kFormula);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_ParseFormula);

void BM_TruthTable(benchmark::State& state) {
    Formula f = parse_formula(kFormula);
    for (auto _ : state) {
        auto rows = truth_table(f);
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(BM_TruthTable);

void BM_ProveTautology(benchmark::State& state) {
    Formula f = parse_formula(kFormula);
    for (auto _ : state) {
        SynthesisResult result = prove_tautology(f);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_ProveTautology);

void BM_CheckProof(benchmark::State& state) {
    Proof proof = prove_tautology(parse_formula(kFormula)).proof;
    for (auto _ : state) {
        auto v = check_proof(proof);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CheckProof);

void BM_ProofTextRoundTrip(benchmark::State& state) {
    Proof proof = prove_tautology(parse_formula(kFormula)).proof;
    for (auto _ : state) {
        Proof back = parse_proof(render_proof(proof));
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_ProofTextRoundTrip);

void BM_TSumEval(benchmark::State& state) {
    auto r = static_cast<std::size_t>(state.range(0));
    TestScheme scheme("A", r, Rational(1, 2));
    ProbModel model = scheme.model();
    EventExpr event = t_sum(scheme, r, r / 2);
    for (auto _ : state) {
        Rational value = b_eval(model, event);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_TSumEval)->Arg(6)->Arg(8)->Arg(10);

void BM_BinomialTail(benchmark::State& state) {
    for (auto _ : state) {
        Rational tail = binomial_tail(200, Rational(80), Rational(120), Rational(1, 2));
        benchmark::DoNotOptimize(tail);
    }
}
BENCHMARK(BM_BinomialTail);

void BM_Density(benchmark::State& state) {
    IndexSet s = IndexSet::intersect(
        IndexSet::unite(IndexSet::residue(0, 6), IndexSet::residue(1, 4)),
        IndexSet::complement(IndexSet::finite({3, 7, 11})));
    for (auto _ : state) {
        Rational d = density(s);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Density);

} // namespace

BENCHMARK_MAIN();
