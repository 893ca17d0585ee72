#include <doctest.h>

#include <random>

#include "logicprob/generators.hpp"
#include "logicprob/qnumber.hpp"

using namespace logicprob;

namespace {

Rational rat(const char* text) { return Rational::parse(text); }

// a/n as a sequence.
SeqReal over_n(Rational a) {
    return SeqReal::rational_function(Poly::constant(std::move(a)), Poly::identity());
}

SeqReal random_seq(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    auto poly = [&](bool nonzero) {
        for (;;) {
            std::vector<Rational> c;
            int d = deg(rng);
            for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
            Poly p(std::move(c));
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    SeqReal s = SeqReal::rational_function(poly(false), poly(true));
    std::uniform_int_distribution<int> patches(0, 2);
    std::uniform_int_distribution<long> idx(1, 12);
    for (int i = patches(rng); i > 0; --i)
        s = SeqReal::patch(std::move(s), idx(rng), Rational(coeff(rng)));
    return s;
}

} // namespace

TEST_CASE("prefix frequencies") {
    IndexSet all = IndexSet::naturals();
    IndexSet nothing = IndexSet::none();
    for (long n : {1, 2, 5, 30}) {
        CHECK(freq(all, n) == Rational(1));
        CHECK(freq(nothing, n) == Rational(0));
    }
    CHECK(freq(IndexSet::residue(0, 2), 10) == rat("1/2"));
    CHECK(freq(IndexSet::residue(0, 2), 9) == rat("4/9"));
    CHECK(freq(IndexSet::threshold(3), 10) == rat("7/10"));
    CHECK_THROWS_AS(freq(all, 0), qnumber_error);
}

TEST_CASE("frequency counts are exact integers over n") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        IndexSet s = random_index_set(rng, 2);
        for (long n : {7L, 24L, 61L}) {
            long count = 0;
            for (long j = 1; j <= n; ++j)
                if (contains(s, j)) ++count;
            CHECK(freq(s, n) == Rational(count, n));
        }
    }
}

TEST_CASE("densities of the base shapes") {
    CHECK(density(IndexSet::residue(0, 2)) == rat("1/2"));
    CHECK(density(IndexSet::threshold(100)) == Rational(1));
    CHECK(density(IndexSet::finite({1, 5, 9})) == Rational(0));
    CHECK(density(IndexSet::cofinite({2, 4})) == Rational(1));
    CHECK(density(IndexSet::intersect(IndexSet::residue(0, 2), IndexSet::residue(0, 3))) ==
          rat("1/6"));
    CHECK(density(IndexSet::unite(IndexSet::residue(0, 2), IndexSet::residue(1, 2))) ==
          Rational(1));
}

TEST_CASE("frequencies converge to the density") {
    // The generator keeps heads below 25 and periods below lcm(1..6) = 60, so
    // prefix counts drift from the density by at most 85.
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        IndexSet s = random_index_set(rng, 2);
        Rational d = density(s);
        for (long n : {720L, 7200L}) {
            Rational drift = (freq(s, n) - d).abs();
            CHECK(drift <= Rational(85, n));
        }
    }
}

TEST_CASE("filter membership") {
    CHECK(in_filter(IndexSet::naturals()));
    CHECK_FALSE(in_filter(IndexSet::none()));
    for (long m : {0L, 5L, 1000L})
        CHECK(in_filter(IndexSet::threshold(m)));
    IndexSet evens = IndexSet::residue(0, 2);
    CHECK_FALSE(in_filter(evens));
    CHECK_FALSE(in_filter(IndexSet::complement(evens)));
}

TEST_CASE("emptiness and inclusion are decidable") {
    IndexSet evens = IndexSet::residue(0, 2);
    IndexSet odds = IndexSet::residue(1, 2);
    CHECK(is_empty(IndexSet::intersect(evens, odds)));
    CHECK(is_empty(IndexSet::intersect(IndexSet::threshold(3), IndexSet::finite({1, 2}))));
    CHECK_FALSE(is_empty(evens));

    CHECK(subset_of(evens, IndexSet::naturals()));
    CHECK(subset_of(IndexSet::residue(0, 4), evens));
    CHECK(subset_of(IndexSet::threshold(10), IndexSet::threshold(5)));
    CHECK_FALSE(subset_of(evens, IndexSet::residue(0, 4)));
}

TEST_CASE("index set validation") {
    CHECK_THROWS_AS(IndexSet::residue(0, 0), qnumber_error);
    CHECK_THROWS_AS(IndexSet::finite({0}), qnumber_error);
    CHECK_THROWS_AS(IndexSet::threshold(-1), qnumber_error);
    CHECK_THROWS_AS(contains(IndexSet::naturals(), 0), qnumber_error);
    // Negative residues normalize.
    CHECK(contains(IndexSet::residue(-1, 3), 2));
}

TEST_CASE("sequence evaluation and definedness") {
    // 1/(n-3): undefined at 3 unless patched.
    SeqReal s = SeqReal::rational_function(
        Poly::constant(Rational(1)),
        Poly({Rational(-3), Rational(1)}));
    CHECK_FALSE(s.value_at(3).has_value());
    CHECK(*s.value_at(4) == Rational(1));
    CHECK(*s.value_at(5) == rat("1/2"));
    CHECK(s.defined_from() == 4);

    SeqReal patched = SeqReal::patch(s, 3, Rational(0));
    CHECK(*patched.value_at(3) == Rational(0));
    CHECK(patched.defined_from() == 1);

    CHECK_THROWS_AS(SeqReal::rational_function(Poly::identity(), Poly()), qnumber_error);
    CHECK_THROWS_AS(SeqReal::patch(SeqReal::identity(), 0, Rational(1)), qnumber_error);
}

TEST_CASE("agreement sets") {
    SeqReal x = SeqReal::identity();
    CHECK(render_index_set(agreement_set(x, x)) == "N");

    SeqReal five = SeqReal::constant(Rational(5));
    SeqReal bumped = SeqReal::patch(five, 3, Rational(7));
    IndexSet a = agreement_set(five, bumped);
    CHECK(a.kind() == IndexSet::Kind::Cofinite);
    CHECK(a.elements() == std::set<long>{3});

    IndexSet never = agreement_set(SeqReal::constant(Rational(0)), over_n(Rational(1)));
    CHECK(never.kind() == IndexSet::Kind::Finite);
    CHECK(is_empty(never));

    // n and n^2 agree exactly at n = 1.
    SeqReal sq = SeqReal::rational_function(Poly::identity() * Poly::identity(),
                                            Poly::constant(Rational(1)));
    IndexSet once = agreement_set(x, sq);
    CHECK(once.kind() == IndexSet::Kind::Finite);
    CHECK(once.elements() == std::set<long>{1});
}

TEST_CASE("q-equality") {
    QNumber five = QNumber::standard(Rational(5));
    QNumber bumped(SeqReal::patch(SeqReal::constant(Rational(5)), 3, Rational(7)));
    CHECK(q_eq(five, bumped));
    CHECK_FALSE(q_eq(QNumber::standard(Rational(0)), QNumber(over_n(Rational(1)))));

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> idx(1, 9);
    std::uniform_int_distribution<long> val(-4, 4);
    for (int i = 0; i < 200; ++i) {
        QNumber a{random_seq(rng)};
        QNumber b{SeqReal::patch(a.rep(), idx(rng), Rational(val(rng)))};
        QNumber c{SeqReal::patch(b.rep(), idx(rng), Rational(val(rng)))};
        CHECK(q_eq(a, a));
        CHECK(q_eq(a, b) == q_eq(b, a));
        CHECK(q_eq(a, b));
        CHECK(q_eq(b, c));
        CHECK(q_eq(a, c));
        QNumber d{random_seq(rng)};
        CHECK(q_eq(a, d) == q_eq(d, a));
    }
}

TEST_CASE("arithmetic on standard numbers is standard") {
    QNumber two = QNumber::standard(Rational(2));
    QNumber three = QNumber::standard(Rational(3));
    CHECK(q_eq(q_add(two, three), QNumber::standard(Rational(5))));
    CHECK(q_eq(q_sub(two, three), QNumber::standard(Rational(-1))));
    CHECK(q_eq(q_mul(two, three), QNumber::standard(Rational(6))));
    CHECK(q_eq(q_div(two, three), QNumber::standard(rat("2/3"))));
}

TEST_CASE("n times 1/n is one") {
    QNumber n{SeqReal::identity()};
    QNumber inv{over_n(Rational(1))};
    CHECK(q_eq(q_mul(n, inv), QNumber::standard(Rational(1))));
    CHECK(q_eq(q_div(n, n), QNumber::standard(Rational(1))));
    CHECK_THROWS_AS(q_div(n, QNumber::standard(Rational(0))), qnumber_error);
    // A finitely perturbed zero is still a Q-zero.
    QNumber zeroish(SeqReal::patch(SeqReal::constant(Rational(0)), 5, Rational(7)));
    CHECK_THROWS_AS(q_div(n, zeroish), qnumber_error);
}

TEST_CASE("operations respect the equivalence") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> idx(1, 9);
    std::uniform_int_distribution<long> val(-4, 4);
    for (int i = 0; i < 150; ++i) {
        QNumber a{random_seq(rng)};
        QNumber b{random_seq(rng)};
        QNumber a2{SeqReal::patch(a.rep(), idx(rng), Rational(val(rng)))};
        QNumber b2{SeqReal::patch(b.rep(), idx(rng), Rational(val(rng)))};
        CHECK(q_eq(q_add(a, b), q_add(a2, b2)));
        CHECK(q_eq(q_sub(a, b), q_sub(a2, b2)));
        CHECK(q_eq(q_mul(a, b), q_mul(a2, b2)));
    }
}

TEST_CASE("classification") {
    CHECK(classify(QNumber(SeqReal::identity())).kind == QClass::InfinitelyLarge);
    for (long a : {1L, 10L, 1000L})
        CHECK(classify(QNumber(over_n(Rational(a)))).kind == QClass::Infinitesimal);

    Classification c = classify(QNumber::standard(rat("-7/3")));
    CHECK(c.kind == QClass::Standard);
    CHECK(*c.value == rat("-7/3"));

    // (n+1)/n tends to 1 but never equals it.
    QNumber near_one(SeqReal::rational_function(Poly({Rational(1), Rational(1)}),
                                                Poly::identity()));
    CHECK(classify(near_one).kind == QClass::FiniteNonstandard);

    // n^2 / (n+1) still diverges.
    QNumber big(SeqReal::rational_function(Poly::identity() * Poly::identity(),
                                           Poly({Rational(1), Rational(1)})));
    CHECK(classify(big).kind == QClass::InfinitelyLarge);

    // Negative divergence has no slot in the taxonomy.
    QNumber down(SeqReal::rational_function(Poly({Rational(0), Rational(-1)}),
                                            Poly::constant(Rational(1))));
    CHECK(classify(down).kind == QClass::Mixed);

    // Finite patches never change the class.
    QNumber patched(SeqReal::patch(SeqReal::constant(Rational(4)), 2, Rational(100)));
    CHECK(classify(patched).kind == QClass::Standard);
}

TEST_CASE("infinitely near") {
    QNumber one = QNumber::standard(Rational(1));

    // 1 - p(1-p)/(n eps^2) for standard p and eps: the gap is c/n.
    Rational p = rat("1/2"), eps = rat("1/10");
    Rational c = p * (Rational(1) - p) / (eps * eps);
    QNumber bound = q_sub(one, QNumber(over_n(c)));
    CHECK(infinitely_near(bound, one));
    CHECK_FALSE(q_eq(bound, one));

    QNumber a{SeqReal::rational_function(Poly({Rational(2), Rational(3)}), Poly::identity())};
    CHECK(infinitely_near(a, a));
    CHECK_FALSE(infinitely_near(one, QNumber::standard(Rational(2))));
    CHECK(infinitely_near(QNumber(SeqReal::identity()),
                          QNumber(SeqReal::patch(SeqReal::identity(), 4, Rational(0)))));
}

TEST_CASE("filter law suite is clean") {
    CheckReport report = filter_laws_check(500);
    CHECK(report.trials == 500);
    CHECK(report.checks > 500);
    std::string msg = report.ok() ? std::string{}
                                  : report.violations.front().law + ": " +
                                        report.violations.front().detail;
    CHECK_MESSAGE(report.ok(), msg);
}
