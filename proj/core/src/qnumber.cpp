#include "logicprob/qnumber.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "logicprob/generators.hpp"

namespace logicprob {

// ---------------------------------------------------------------------------
// Index sets

IndexSet IndexSet::finite(std::set<long> elements) {
    for (long e : elements)
        if (e < 1)
            throw qnumber_error("index sets contain positive naturals only");
    return IndexSet(std::make_shared<const Node>(
        Node{Kind::Finite, std::move(elements), 0, 0, nullptr, nullptr}));
}

IndexSet IndexSet::cofinite(std::set<long> excluded) {
    for (long e : excluded)
        if (e < 1)
            throw qnumber_error("index sets contain positive naturals only");
    return IndexSet(std::make_shared<const Node>(
        Node{Kind::Cofinite, std::move(excluded), 0, 0, nullptr, nullptr}));
}

IndexSet IndexSet::residue(long a, long m) {
    if (m < 1)
        throw qnumber_error("residue modulus must be positive");
    a = ((a % m) + m) % m;
    return IndexSet(std::make_shared<const Node>(Node{Kind::Residue, {}, a, m, nullptr, nullptr}));
}

IndexSet IndexSet::threshold(long m) {
    if (m < 0)
        throw qnumber_error("threshold must be nonnegative");
    return IndexSet(std::make_shared<const Node>(Node{Kind::Threshold, {}, 0, m, nullptr, nullptr}));
}

IndexSet IndexSet::intersect(IndexSet a, IndexSet b) {
    return IndexSet(std::make_shared<const Node>(
        Node{Kind::Inter, {}, 0, 0, std::move(a.node_), std::move(b.node_)}));
}

IndexSet IndexSet::unite(IndexSet a, IndexSet b) {
    return IndexSet(std::make_shared<const Node>(
        Node{Kind::Union, {}, 0, 0, std::move(a.node_), std::move(b.node_)}));
}

IndexSet IndexSet::complement(IndexSet a) {
    return IndexSet(std::make_shared<const Node>(
        Node{Kind::Compl, {}, 0, 0, std::move(a.node_), nullptr}));
}

const std::set<long>& IndexSet::elements() const {
    if (node_->kind != Kind::Finite && node_->kind != Kind::Cofinite)
        throw std::logic_error("elements on non-(co)finite set");
    return node_->elems;
}

long IndexSet::residue_class() const {
    if (node_->kind != Kind::Residue) throw std::logic_error("not a residue set");
    return node_->a;
}

long IndexSet::modulus() const {
    if (node_->kind != Kind::Residue) throw std::logic_error("not a residue set");
    return node_->m;
}

long IndexSet::bound() const {
    if (node_->kind != Kind::Threshold) throw std::logic_error("not a threshold set");
    return node_->m;
}

IndexSet IndexSet::left() const {
    if (node_->kind != Kind::Inter && node_->kind != Kind::Union)
        throw std::logic_error("left on leaf set");
    return IndexSet(node_->x);
}

IndexSet IndexSet::right() const {
    if (node_->kind != Kind::Inter && node_->kind != Kind::Union)
        throw std::logic_error("right on leaf set");
    return IndexSet(node_->y);
}

IndexSet IndexSet::inner() const {
    if (node_->kind != Kind::Compl) throw std::logic_error("inner on non-complement");
    return IndexSet(node_->x);
}

bool contains(const IndexSet& s, long n) {
    if (n < 1)
        throw qnumber_error("index sets are subsets of the positive naturals");
    switch (s.kind()) {
    case IndexSet::Kind::Finite: return s.elements().count(n) != 0;
    case IndexSet::Kind::Cofinite: return s.elements().count(n) == 0;
    case IndexSet::Kind::Residue: return n % s.modulus() == s.residue_class();
    case IndexSet::Kind::Threshold: return n > s.bound();
    case IndexSet::Kind::Inter: return contains(s.left(), n) && contains(s.right(), n);
    case IndexSet::Kind::Union: return contains(s.left(), n) || contains(s.right(), n);
    case IndexSet::Kind::Compl: return !contains(s.inner(), n);
    }
    return false;
}

std::string render_index_set(const IndexSet& s) {
    auto list = [](const std::set<long>& xs) {
        std::string out;
        for (long x : xs) out += " " + std::to_string(x);
        return out;
    };
    switch (s.kind()) {
    case IndexSet::Kind::Finite:
        return s.elements().empty() ? "empty" : "(fin" + list(s.elements()) + ")";
    case IndexSet::Kind::Cofinite:
        return s.elements().empty() ? "N" : "(cofin" + list(s.elements()) + ")";
    case IndexSet::Kind::Residue:
        return "(res " + std::to_string(s.residue_class()) + " " +
               std::to_string(s.modulus()) + ")";
    case IndexSet::Kind::Threshold:
        return "(thr " + std::to_string(s.bound()) + ")";
    case IndexSet::Kind::Inter:
        return "(and " + render_index_set(s.left()) + " " + render_index_set(s.right()) + ")";
    case IndexSet::Kind::Union:
        return "(or " + render_index_set(s.left()) + " " + render_index_set(s.right()) + ")";
    case IndexSet::Kind::Compl:
        return "(not " + render_index_set(s.inner()) + ")";
    }
    return {};
}

namespace {

// Eventually periodic normal form: indices 1..head_len are listed explicitly;
// beyond that, membership of n depends only on n mod period.
struct EPForm {
    long head_len = 0;
    std::vector<char> head;
    long period = 1;
    std::vector<char> cycle;

    bool member(long n) const {
        return n <= head_len ? head[static_cast<std::size_t>(n - 1)] != 0
                             : cycle[static_cast<std::size_t>(n % period)] != 0;
    }
};

constexpr long kMaxPeriod = 1'000'000;

EPForm ep_form(const IndexSet& s) {
    switch (s.kind()) {
    case IndexSet::Kind::Finite:
    case IndexSet::Kind::Cofinite: {
        bool complemented = s.kind() == IndexSet::Kind::Cofinite;
        EPForm f;
        f.head_len = s.elements().empty() ? 0 : *s.elements().rbegin();
        f.head.assign(static_cast<std::size_t>(f.head_len),
                      static_cast<char>(complemented ? 1 : 0));
        for (long e : s.elements())
            f.head[static_cast<std::size_t>(e - 1)] = complemented ? 0 : 1;
        f.cycle = {static_cast<char>(complemented ? 1 : 0)};
        return f;
    }
    case IndexSet::Kind::Residue: {
        EPForm f;
        f.period = s.modulus();
        f.cycle.assign(static_cast<std::size_t>(f.period), 0);
        f.cycle[static_cast<std::size_t>(s.residue_class())] = 1;
        return f;
    }
    case IndexSet::Kind::Threshold: {
        EPForm f;
        f.head_len = s.bound();
        f.head.assign(static_cast<std::size_t>(f.head_len), 0);
        f.cycle = {1};
        return f;
    }
    case IndexSet::Kind::Compl: {
        EPForm f = ep_form(s.inner());
        for (auto& b : f.head) b = !b;
        for (auto& b : f.cycle) b = !b;
        return f;
    }
    case IndexSet::Kind::Inter:
    case IndexSet::Kind::Union: {
        EPForm a = ep_form(s.left());
        EPForm b = ep_form(s.right());
        bool conj = s.kind() == IndexSet::Kind::Inter;
        EPForm f;
        f.head_len = std::max(a.head_len, b.head_len);
        f.head.resize(static_cast<std::size_t>(f.head_len));
        for (long n = 1; n <= f.head_len; ++n) {
            bool v = conj ? (a.member(n) && b.member(n)) : (a.member(n) || b.member(n));
            f.head[static_cast<std::size_t>(n - 1)] = v;
        }
        f.period = std::lcm(a.period, b.period);
        if (f.period > kMaxPeriod)
            throw qnumber_error("combined period too large for the supported class");
        f.cycle.resize(static_cast<std::size_t>(f.period));
        for (long r = 0; r < f.period; ++r) {
            bool va = a.cycle[static_cast<std::size_t>(r % a.period)] != 0;
            bool vb = b.cycle[static_cast<std::size_t>(r % b.period)] != 0;
            f.cycle[static_cast<std::size_t>(r)] = conj ? (va && vb) : (va || vb);
        }
        return f;
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

Rational freq(const IndexSet& s, long n) {
    if (n < 1)
        throw qnumber_error("frequency needs n >= 1");
    long count = 0;
    for (long i = 1; i <= n; ++i)
        if (contains(s, i)) ++count;
    return Rational(count, n);
}

Rational density(const IndexSet& s) {
    EPForm f = ep_form(s);
    long count = std::count(f.cycle.begin(), f.cycle.end(), static_cast<char>(1));
    return Rational(count, f.period);
}

bool in_filter(const IndexSet& s) {
    return density(s) == Rational(1);
}

bool is_empty(const IndexSet& s) {
    EPForm f = ep_form(s);
    return std::none_of(f.head.begin(), f.head.end(), [](char b) { return b != 0; }) &&
           std::none_of(f.cycle.begin(), f.cycle.end(), [](char b) { return b != 0; });
}

bool subset_of(const IndexSet& a, const IndexSet& b) {
    return is_empty(IndexSet::intersect(a, IndexSet::complement(b)));
}

// ---------------------------------------------------------------------------
// Polynomials

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == Rational(0))
        c_.pop_back();
}

Poly Poly::constant(Rational c) { return Poly(std::vector<Rational>{std::move(c)}); }

Poly Poly::identity() { return Poly({Rational(0), Rational(1)}); }

const Rational& Poly::lead() const {
    if (c_.empty())
        throw std::logic_error("lead of the zero polynomial");
    return c_.back();
}

Rational Poly::eval(long n) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * Rational(n) + c_[i];
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

std::vector<long> Poly::positive_integer_roots() const {
    if (is_zero())
        throw std::logic_error("roots of the zero polynomial");
    // Drop the x^v factor; it only contributes the root 0.
    std::size_t v = 0;
    while (c_[v] == Rational(0)) ++v;
    std::vector<Rational> r(c_.begin() + static_cast<long>(v), c_.end());
    if (r.size() == 1)
        return {};
    // Cauchy bound on root magnitude, then scan.
    Rational bound(1);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        Rational q = (r[i] / r.back()).abs();
        if (q > bound) bound = q;
    }
    long limit = (bound + Rational(1)).ceil_long();
    if (limit > 200'000)
        throw qnumber_error("polynomial root bound too large for the supported class");
    std::vector<long> roots;
    Poly reduced(r);
    for (long n = 1; n <= limit; ++n)
        if (reduced.eval(n) == Rational(0))
            roots.push_back(n);
    return roots;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == Rational(0)) continue;
        if (!first) out << " + ";
        if (i == 0 || c_[i] != Rational(1)) out << c_[i].str();
        if (i >= 1) {
            if (c_[i] != Rational(1)) out << "*";
            out << "n";
            if (i >= 2) out << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return out.str();
}

// ---------------------------------------------------------------------------
// Sequences

SeqReal::SeqReal(Poly num, Poly den, std::map<long, Rational> overrides)
    : num_(std::move(num)), den_(std::move(den)), overrides_(std::move(overrides)) {}

SeqReal SeqReal::constant(Rational c) {
    return SeqReal(Poly::constant(std::move(c)), Poly::constant(Rational(1)), {});
}

SeqReal SeqReal::identity() {
    return SeqReal(Poly::identity(), Poly::constant(Rational(1)), {});
}

SeqReal SeqReal::rational_function(Poly num, Poly den) {
    if (den.is_zero())
        throw qnumber_error("sequence denominator is the zero polynomial");
    return SeqReal(std::move(num), std::move(den), {});
}

SeqReal SeqReal::patch(SeqReal base, long index, Rational value) {
    if (index < 1)
        throw qnumber_error("override index must be >= 1");
    base.overrides_[index] = std::move(value);
    return base;
}

std::optional<Rational> SeqReal::value_at(long n) const {
    if (n < 1)
        throw qnumber_error("sequences are indexed from 1");
    if (auto it = overrides_.find(n); it != overrides_.end())
        return it->second;
    Rational d = den_.eval(n);
    if (d == Rational(0))
        return std::nullopt;
    return num_.eval(n) / d;
}

long SeqReal::defined_from() const {
    long from = 1;
    for (long root : den_.positive_integer_roots())
        if (!overrides_.count(root))
            from = std::max(from, root + 1);
    return from;
}

std::string SeqReal::str() const {
    std::string base;
    if (den_ == Poly::constant(Rational(1))) {
        base = num_.str();
    } else {
        base = "(" + num_.str() + ")/(" + den_.str() + ")";
    }
    for (const auto& [n, v] : overrides_)
        base += " [" + std::to_string(n) + " -> " + v.str() + "]";
    return base;
}

IndexSet agreement_set(const SeqReal& r, const SeqReal& s) {
    Poly diff = r.num() * s.den() - s.num() * r.den();

    std::set<long> special;
    for (const auto& [n, v] : r.overrides()) special.insert(n);
    for (const auto& [n, v] : s.overrides()) special.insert(n);
    for (long n : r.den().positive_integer_roots()) special.insert(n);
    for (long n : s.den().positive_integer_roots()) special.insert(n);

    auto agree_at = [&](long n) {
        auto a = r.value_at(n);
        auto b = s.value_at(n);
        return a && b && *a == *b;
    };

    if (diff.is_zero()) {
        std::set<long> excluded;
        for (long n : special)
            if (!agree_at(n)) excluded.insert(n);
        return IndexSet::cofinite(std::move(excluded));
    }
    std::set<long> members;
    for (long n : diff.positive_integer_roots())
        if (!special.count(n)) members.insert(n);
    for (long n : special)
        if (agree_at(n)) members.insert(n);
    return IndexSet::finite(std::move(members));
}

// ---------------------------------------------------------------------------
// Q-number arithmetic

bool q_eq(const QNumber& a, const QNumber& b) {
    return in_filter(agreement_set(a.rep(), b.rep()));
}

namespace {

enum class PointOp { Add, Sub, Mul, Div };

QNumber combine(const QNumber& a, const QNumber& b, PointOp op) {
    const SeqReal& x = a.rep();
    const SeqReal& y = b.rep();
    Poly num, den;
    switch (op) {
    case PointOp::Add:
        num = x.num() * y.den() + y.num() * x.den();
        den = x.den() * y.den();
        break;
    case PointOp::Sub:
        num = x.num() * y.den() - y.num() * x.den();
        den = x.den() * y.den();
        break;
    case PointOp::Mul:
        num = x.num() * y.num();
        den = x.den() * y.den();
        break;
    case PointOp::Div:
        num = x.num() * y.den();
        den = x.den() * y.num();
        break;
    }
    SeqReal result = SeqReal::rational_function(std::move(num), std::move(den));

    std::set<long> keys;
    for (const auto& [n, v] : x.overrides()) keys.insert(n);
    for (const auto& [n, v] : y.overrides()) keys.insert(n);
    for (long n : keys) {
        auto va = x.value_at(n);
        auto vb = y.value_at(n);
        if (!va || !vb) continue;
        switch (op) {
        case PointOp::Add: result = SeqReal::patch(std::move(result), n, *va + *vb); break;
        case PointOp::Sub: result = SeqReal::patch(std::move(result), n, *va - *vb); break;
        case PointOp::Mul: result = SeqReal::patch(std::move(result), n, *va * *vb); break;
        case PointOp::Div:
            if (*vb != Rational(0))
                result = SeqReal::patch(std::move(result), n, *va / *vb);
            break;
        }
    }
    return QNumber(std::move(result));
}

} // namespace

QNumber q_add(const QNumber& a, const QNumber& b) { return combine(a, b, PointOp::Add); }
QNumber q_sub(const QNumber& a, const QNumber& b) { return combine(a, b, PointOp::Sub); }
QNumber q_mul(const QNumber& a, const QNumber& b) { return combine(a, b, PointOp::Mul); }

QNumber q_div(const QNumber& a, const QNumber& b) {
    if (q_eq(b, QNumber::standard(Rational(0))))
        throw qnumber_error("division by a Q-zero");
    return combine(a, b, PointOp::Div);
}

const char* qclass_name(QClass k) {
    switch (k) {
    case QClass::Standard: return "standard";
    case QClass::Infinitesimal: return "infinitesimal";
    case QClass::InfinitelyLarge: return "infinitely-large";
    case QClass::FiniteNonstandard: return "finite-nonstandard";
    case QClass::Mixed: return "mixed";
    }
    return "?";
}

Classification classify(const QNumber& a) {
    const Poly& num = a.rep().num();
    const Poly& den = a.rep().den();
    if (num.is_zero())
        return {QClass::Standard, Rational(0)};
    if (num.degree() == den.degree()) {
        Rational c = num.lead() / den.lead();
        if (num == den * Poly::constant(c))
            return {QClass::Standard, std::move(c)};
        return {QClass::FiniteNonstandard, std::nullopt};
    }
    if (num.degree() < den.degree())
        return {QClass::Infinitesimal, std::nullopt};
    // Degree excess: the sequence diverges; only divergence to +infinity is an
    // infinitely large number, a negatively divergent sequence has no class in
    // this taxonomy.
    if (num.lead() / den.lead() > Rational(0))
        return {QClass::InfinitelyLarge, std::nullopt};
    return {QClass::Mixed, std::nullopt};
}

bool infinitely_near(const QNumber& a, const QNumber& b) {
    if (q_eq(a, b))
        return true;
    Classification c = classify(q_sub(a, b));
    return c.kind == QClass::Infinitesimal ||
           (c.kind == QClass::Standard && *c.value == Rational(0));
}

// ---------------------------------------------------------------------------
// Law suite

CheckReport filter_laws_check(std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CheckReport report;
    report.trials = samples;

    auto expect = [&](bool ok, const std::string& law, const std::string& detail) {
        ++report.checks;
        if (!ok)
            report.violations.push_back({law, detail});
    };

    const long freq_samples[] = {1, 2, 7, 30, 360};

    // Fixed facts: the full and empty sets, and the even-numbers witness that
    // the filter is not an ultrafilter.
    IndexSet all = IndexSet::naturals();
    IndexSet nothing = IndexSet::none();
    for (long n : freq_samples) {
        expect(freq(all, n) == Rational(1), "s1", "freq(N," + std::to_string(n) + ")");
        expect(freq(nothing, n) == Rational(0), "s4", "freq(empty," + std::to_string(n) + ")");
    }
    expect(in_filter(all), "s5", "N in filter");
    expect(!in_filter(nothing), "s5", "empty not in filter");
    IndexSet evens = IndexSet::residue(0, 2);
    expect(!in_filter(evens) && !in_filter(IndexSet::complement(evens)),
           "not-ultrafilter", "evens and odds both outside the filter");

    std::uniform_int_distribution<long> small(0, 24);
    for (std::size_t t = 0; t < samples; ++t) {
        IndexSet a = random_index_set(rng, 2);
        IndexSet b = random_index_set(rng, 2);
        std::string ctx = " on A=" + render_index_set(a) + " B=" + render_index_set(b);

        for (long n : freq_samples) {
            Rational fb = freq(b, n);
            Rational fab = freq(IndexSet::intersect(a, b), n);
            Rational fcb = freq(IndexSet::intersect(IndexSet::complement(a), b), n);
            expect(fab + fcb == fb, "s2", "partition of B at n=" + std::to_string(n) + ctx);
            expect(freq(a, n) + freq(IndexSet::complement(a), n) == Rational(1), "s3",
                   "partition of N at n=" + std::to_string(n) + ctx);
        }

        // Finite sets have density zero.
        expect(!in_filter(IndexSet::finite({small(rng) + 1, small(rng) + 1})), "density",
               "finite set never in filter");

        // s6: closure under intersection, on sets pushed into the filter.
        IndexSet fa = IndexSet::unite(a, IndexSet::threshold(small(rng)));
        IndexSet fb2 = IndexSet::unite(b, IndexSet::threshold(small(rng)));
        expect(in_filter(fa) && in_filter(fb2), "s6", "tail-padded sets in filter" + ctx);
        expect(in_filter(IndexSet::intersect(fa, fb2)), "s6", "intersection in filter" + ctx);
        if (in_filter(a) && in_filter(b))
            expect(in_filter(IndexSet::intersect(a, b)), "s6", "intersection (raw)" + ctx);

        // s7: upward closure.
        IndexSet superset = IndexSet::unite(fa, b);
        expect(subset_of(fa, superset), "s7", "constructed superset" + ctx);
        expect(in_filter(superset), "s7", "superset in filter" + ctx);
    }
    return report;
}

} // namespace logicprob
