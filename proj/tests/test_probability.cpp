#include <doctest.h>

#include <bit>
#include <random>

#include "logicprob/event.hpp"
#include "logicprob/generators.hpp"
#include "logicprob/model_io.hpp"

using namespace logicprob;

namespace {

Rational rat(const char* text) { return Rational::parse(text); }

ProbModel half_half() {
    return ProbModel::product({{"A", rat("1/2")}, {"B", rat("1/2")}, {"C", rat("1/2")}});
}

ProbModel five_atom_product() {
    return ProbModel::product({{"A", rat("1/2")},
                               {"B", rat("1/3")},
                               {"C", rat("1/4")},
                               {"D", rat("2/5")},
                               {"E", rat("9/10")}});
}

ProbModel five_atom_joint() {
    std::vector<std::string> names{"A", "B", "C", "D", "E"};
    std::vector<Rational> weights;
    long total = 0;
    for (long i = 1; i <= 32; ++i) total += i;
    for (long i = 1; i <= 32; ++i)
        weights.push_back(Rational(i, total));
    return ProbModel::joint(std::move(names), std::move(weights));
}

std::size_t successes(std::size_t outcome, std::size_t r) {
    return static_cast<std::size_t>(std::popcount(outcome & ((std::size_t{1} << r) - 1)));
}

} // namespace

TEST_CASE("event values on a product model") {
    ProbModel m = half_half();
    EventExpr a = EventExpr::atom("A");
    EventExpr b = EventExpr::atom("B");
    EventExpr c = EventExpr::atom("C");

    CHECK(b_eval(m, EventExpr::product(a, b)) == rat("1/4"));
    CHECK(b_eval(m, EventExpr::certain()) == Rational(1));
    CHECK(b_eval(m, EventExpr::impossible()) == Rational(0));
    CHECK(b_eval(m, EventExpr::product(
                        EventExpr::product(a, EventExpr::complement(a)), c)) ==
          Rational(0));
    // p10 with equality on independent atoms.
    CHECK(b_eval(m, EventExpr::product(a, EventExpr::complement(b))) ==
          b_eval(m, a) * b_eval(m, EventExpr::complement(b)));
    // Antithetical pair sums to one.
    CHECK(b_eval(m, EventExpr::sum(b, EventExpr::complement(b))) == Rational(1));
}

TEST_CASE("b_eval rejects atoms the model does not bind") {
    CHECK_THROWS_AS(b_eval(half_half(), EventExpr::atom("Z")), model_error);
}

TEST_CASE("model construction is validated") {
    CHECK_THROWS_AS(ProbModel::product({{"A", rat("3/2")}}), model_error);
    CHECK_THROWS_AS(ProbModel::product({{"A", rat("1/2")}, {"A", rat("1/2")}}),
                    model_error);
    CHECK_THROWS_AS(ProbModel::joint({"A"}, {rat("1/2"), rat("1/4")}), model_error);
    CHECK_THROWS_AS(ProbModel::joint({"A"}, {rat("3/2"), rat("-1/2")}), model_error);
    CHECK_THROWS_AS(ProbModel::joint({"A"}, {rat("1/2")}), model_error);
}

TEST_CASE("identity suite passes on product and joint models") {
    for (const ProbModel& m : {five_atom_product(), five_atom_joint()}) {
        CheckReport report = verify_b_identities(m, 1000);
        CHECK(report.trials == 1000);
        std::string msg = report.ok() ? std::string{}
                                      : report.violations.front().law + ": " +
                                            report.violations.front().detail;
        CHECK_MESSAGE(report.ok(), msg);
    }
}

TEST_CASE("sum evaluates as the complement-product form") {
    std::mt19937_64 rng(5);
    ProbModel m = five_atom_joint();
    for (int i = 0; i < 200; ++i) {
        EventExpr e = random_event(rng, m.names(), 4);
        EventExpr plain = desugar_sums(e);
        CHECK(b_eval(m, e) == b_eval(m, plain));
    }
}

TEST_CASE("series members in fixed order") {
    TestScheme scheme("A", 5, rat("1/2"));
    auto members = series_members(scheme, 3, 2);
    REQUIRE(members.size() == 3);
    CHECK(render_event(members[0]) == "((s1 * s2) * (#s3))");
    CHECK(render_event(members[1]) == "((s1 * (#s2)) * s3)");
    CHECK(render_event(members[2]) == "(((#s1) * s2) * s3)");

    auto zero = series_members(scheme, 3, 0);
    REQUIRE(zero.size() == 1);
    CHECK(render_event(zero[0]) == "(((#s1) * (#s2)) * (#s3))");

    // (s1 . s2 . #s3 . s4 . #s5) belongs to the range-5 count-3 series.
    EventExpr probe = EventExpr::product(
        EventExpr::product(
            EventExpr::product(EventExpr::product(EventExpr::atom("s1"),
                                                  EventExpr::atom("s2")),
                               EventExpr::complement(EventExpr::atom("s3"))),
            EventExpr::atom("s4")),
        EventExpr::complement(EventExpr::atom("s5")));
    auto five = series_members(scheme, 5, 3);
    CHECK(std::count(five.begin(), five.end(), probe) == 1);

    CHECK_THROWS_AS(series_members(scheme, 3, 4), std::out_of_range);
    CHECK_THROWS_AS(series_members(scheme, 6, 1), std::out_of_range);
}

TEST_CASE("member counts are binomial coefficients") {
    TestScheme scheme("A", 8, rat("1/3"));
    for (std::size_t r = 1; r <= 8; ++r)
        for (std::size_t k = 0; k <= r; ++k)
            CHECK(Rational(static_cast<long>(series_members(scheme, r, k).size())) ==
                  binomial_coefficient(r, k));
}

TEST_CASE("t-sums") {
    TestScheme scheme("A", 3, rat("1/2"));
    // A single member needs no sum node.
    CHECK(render_event(t_sum(scheme, 3, 3)) == "((s1 * s2) * s3)");
    CHECK(b_eval(scheme.model(), t_sum(scheme, 3, 2)) == rat("3/8"));

    // Exactly-k semantics on outcome rows.
    ProbModel m = scheme.model();
    EventExpr two = t_sum(scheme, 3, 2);
    for (std::size_t row = 0; row < m.outcome_count(); ++row)
        CHECK(event_occurs(m, two, row) == (successes(row, 3) == 2));
}

TEST_CASE("t-sums partition the outcome space") {
    TestScheme scheme("A", 5, rat("2/7"));
    ProbModel m = scheme.model();
    Rational total(0);
    for (std::size_t k = 0; k <= 5; ++k) {
        total += b_eval(m, t_sum(scheme, 5, k));
        for (std::size_t j = 0; j < k; ++j)
            CHECK(b_eval(m, EventExpr::product(t_sum(scheme, 5, j),
                                               t_sum(scheme, 5, k))) == Rational(0));
    }
    CHECK(total == Rational(1));
}

TEST_CASE("closed form against the enumeration oracle") {
    for (const char* p_text : {"1/3", "1/2", "9/10"}) {
        Rational p = rat(p_text);
        for (std::size_t r = 1; r <= 8; ++r) {
            TestScheme scheme("A", r, p);
            ProbModel m = scheme.model();
            Rational sum(0);
            for (std::size_t k = 0; k <= r; ++k) {
                Rational pmf = bernoulli_pmf(r, k, p);
                CHECK(b_eval(m, t_sum(scheme, r, k)) == pmf);
                sum += pmf;
            }
            CHECK(sum == Rational(1));
        }
    }
    CHECK(bernoulli_pmf(3, 2, rat("1/2")) == rat("3/8"));
    CHECK(bernoulli_pmf(7, 0, rat("1/3")) == rat("2/3").pow(7));
    CHECK_THROWS_AS(bernoulli_pmf(3, 4, rat("1/2")), std::out_of_range);
}

TEST_CASE("window rounding") {
    KRange r1 = f_bounds(10, rat("3/2"), rat("29/10"));
    CHECK(r1.k == 2);
    CHECK(r1.l == 2);
    CHECK_FALSE(r1.empty);

    KRange r2 = f_bounds(10, rat("-1"), rat("12"));
    CHECK(r2.k == 0);
    CHECK(r2.l == 10);
    CHECK(r2.clipped_low);
    CHECK(r2.clipped_high);

    KRange r3 = f_bounds(10, rat("21/10"), rat("29/10"));
    CHECK(r3.empty); // ceil(2.1) = 3 exceeds floor(2.9) = 2

    CHECK_THROWS_AS(f_bounds(10, rat("3"), rat("2")), std::out_of_range);
}

TEST_CASE("window events") {
    TestScheme scheme("A", 5, rat("1/2"));
    ProbModel m = scheme.model();

    CHECK(f_event(scheme, 5, rat("2"), rat("2")) == t_sum(scheme, 5, 2));
    CHECK(f_event(scheme, 5, rat("3/2"), rat("29/10")) == t_sum(scheme, 5, 2));
    CHECK(f_event(scheme, 5, rat("6"), rat("13/2")) == EventExpr::impossible());

    // Occurrence pattern: between a and b successes, inclusive.
    EventExpr window = f_event(scheme, 5, rat("3/2"), rat("4"));
    for (std::size_t row = 0; row < m.outcome_count(); ++row) {
        std::size_t k = successes(row, 5);
        CHECK(event_occurs(m, window, row) == (2 <= k && k <= 4));
    }
}

TEST_CASE("window probability equals the partial binomial sum") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-4, 40);
    for (const char* p_text : {"1/4", "1/2", "7/10"}) {
        Rational p = rat(p_text);
        for (std::size_t r = 2; r <= 8; r += 3) {
            TestScheme scheme("A", r, p);
            ProbModel m = scheme.model();
            for (int i = 0; i < 12; ++i) {
                Rational a(num(rng), 4);
                Rational b = a + Rational(num(rng) + 4, 3).abs();
                CHECK(b_eval(m, f_event(scheme, r, a, b)) == binomial_tail(r, a, b, p));
            }
        }
    }
}

TEST_CASE("tail sums") {
    CHECK(binomial_tail(100, rat("40"), rat("60"), rat("1/2")) >= rat("3/4"));
    CHECK(binomial_tail(10, rat("0"), rat("10"), rat("1/3")) == Rational(1));
    CHECK(binomial_tail(10, rat("11"), rat("12"), rat("1/3")) == Rational(0));
}

TEST_CASE("deviation bound") {
    CHECK(lln_bound(100, rat("1/2"), rat("1/10")) == rat("3/4"));
    CHECK(lln_bound(50, rat("0"), rat("1/10")) == Rational(1));
    CHECK(lln_bound(50, rat("1"), rat("1/10")) == Rational(1));
    CHECK(lln_bound(2, rat("1/2"), rat("1/10")) < Rational(0)); // bound may go negative
    CHECK_THROWS_AS(lln_bound(10, rat("1/2"), rat("0")), std::out_of_range);

    // Tail dominates the bound on a sample grid.
    for (long r : {10L, 25L, 50L}) {
        for (const char* p_text : {"1/10", "1/2", "3/4"}) {
            for (const char* e_text : {"1/20", "1/10"}) {
                Rational p = rat(p_text), eps = rat(e_text);
                Rational rr(r);
                Rational tail = binomial_tail(static_cast<std::size_t>(r),
                                              rr * (p - eps), rr * (p + eps), p);
                CHECK(tail >= lln_bound(static_cast<std::size_t>(r), p, eps));
            }
        }
    }
}

TEST_CASE("variance identity") {
    CHECK_FALSE(variance_identity_check(1, rat("1/2")).has_value());
    CHECK_FALSE(variance_identity_check(12, rat("1/3")).has_value());
    CHECK_FALSE(variance_identity_check(0, rat("1/2")).has_value());
    // Spot value: r=1, p=1/2 gives variance 1/4 on both sides.
    Rational direct(0);
    for (std::size_t k = 0; k <= 1; ++k) {
        Rational dev = Rational(static_cast<long>(k)) - rat("1/2");
        direct += dev * dev * bernoulli_pmf(1, k, rat("1/2"));
    }
    CHECK(direct == rat("1/4"));
}

TEST_CASE("degenerate models restrict to two values") {
    ProbModel ones = ProbModel::product({{"A1", Rational(1)}, {"A2", Rational(1)}});
    CHECK(b_eval(ones, EventExpr::product(EventExpr::atom("A1"), EventExpr::atom("A2"))) ==
          Rational(1));

    ProbModel mixed = ProbModel::product({{"A", Rational(1)},
                                          {"B", Rational(0)},
                                          {"C", Rational(1)},
                                          {"D", Rational(0)}});
    CHECK(mixed.is_degenerate());
    CheckReport report = boolean_restriction_check(mixed, 500);
    CHECK(report.ok());
    CHECK(report.checks >= 500 * 3);

    CHECK_FALSE(half_half().is_degenerate());
    CHECK_THROWS_AS(boolean_restriction_check(half_half(), 10), model_error);
}

TEST_CASE("test schemes validate their parameters") {
    CHECK_THROWS_AS(TestScheme("A", 0, rat("1/2")), model_error);
    CHECK_THROWS_AS(TestScheme("A", 3, rat("3/2")), model_error);
    TestScheme ok("A", 3, rat("1/2"));
    CHECK(ok.model().is_product());
    CHECK(ok.model().names() == std::vector<std::string>{"s1", "s2", "s3"});
}

TEST_CASE("sum association does not change values") {
    TestScheme scheme("A", 4, rat("1/3"));
    ProbModel m = scheme.model();
    auto members = series_members(scheme, 4, 2);
    EventExpr left = members[0];
    for (std::size_t i = 1; i < members.size(); ++i)
        left = EventExpr::sum(left, members[i]);
    EventExpr right = members.back();
    for (std::size_t i = members.size() - 1; i-- > 0;)
        right = EventExpr::sum(members[i], right);
    CHECK(b_eval(m, left) == b_eval(m, right));
}

TEST_CASE("model files round-trip") {
    ProbModel product = five_atom_product();
    ProbModel loaded = load_model(save_model(product));
    CHECK(loaded.is_product());
    CHECK(loaded.names() == product.names());
    for (std::size_t row = 0; row < product.outcome_count(); ++row)
        CHECK(loaded.weight(row) == product.weight(row));

    ProbModel joint = five_atom_joint();
    ProbModel jloaded = load_model(save_model(joint));
    CHECK_FALSE(jloaded.is_product());
    for (std::size_t row = 0; row < joint.outcome_count(); ++row)
        CHECK(jloaded.weight(row) == joint.weight(row));
}

TEST_CASE("model files are validated") {
    CHECK_THROWS_AS(load_model("not json"), model_error);
    CHECK_THROWS_AS(load_model("{}"), model_error);
    CHECK_THROWS_AS(load_model(R"({"atoms": []})"), model_error);
    CHECK_THROWS_AS(load_model(R"({"atoms": [{"name": "A"}]})"), model_error);
    CHECK_THROWS_AS(load_model(R"({"atoms": [{"name": "A", "p": "2"}]})"), model_error);
    CHECK_THROWS_AS(load_model(R"({"names": ["A"], "joint": [{"bits": "00", "weight": "1"}]})"),
                    model_error);
    // Decimal probabilities convert exactly.
    ProbModel m = load_model(R"({"atoms": [{"name": "A", "p": "0.25"}]})");
    CHECK(m.atom_probs()[0] == rat("1/4"));
}
