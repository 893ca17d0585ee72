#include "logicprob/rational.hpp"

#include <cctype>
#include <ostream>

namespace logicprob {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0)
        throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (!s.empty() && s[0] == '+')
        s.erase(s.begin()); // GMP's string constructor takes '-' but not '+'
    if (s.empty())
        throw std::invalid_argument("empty rational literal");

    auto digits_only = [](const std::string& t, size_t from) {
        if (from >= t.size()) return false;
        for (size_t i = from; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    size_t sign_len = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        size_t nsign = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
        if (!digits_only(num, nsign) || !digits_only(den, 0))
            throw std::invalid_argument("bad rational literal: " + text);
        mpz_class den_z(den);
        if (den_z == 0)
            throw std::invalid_argument("zero denominator in: " + text);
        mpq_class q{mpz_class(num), den_z};
        q.canonicalize();
        return Rational(q);
    }
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.size() == sign_len) whole += "0";
        if (!digits_only(whole, sign_len) || (!frac.empty() && !digits_only(frac, 0)))
            throw std::invalid_argument("bad decimal literal: " + text);
        mpz_class scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class whole_z(whole);
        mpz_class frac_z = frac.empty() ? mpz_class(0) : mpz_class(frac);
        bool negative = sign_len == 1 && s[0] == '-';
        mpz_class num = ::abs(whole_z) * scale + frac_z;
        if (negative) num = -num;
        mpq_class q(num, scale);
        q.canonicalize();
        return Rational(q);
    }
    if (!digits_only(s, sign_len))
        throw std::invalid_argument("bad rational literal: " + text);
    return Rational(mpq_class(mpz_class(s)));
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

long Rational::floor_long() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    if (!q.fits_slong_p())
        throw std::overflow_error("rational floor out of long range");
    return q.get_si();
}

long Rational::ceil_long() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    if (!q.fits_slong_p())
        throw std::overflow_error("rational ceiling out of long range");
    return q.get_si();
}

std::string Rational::str() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binomial_coefficient(unsigned long n, unsigned long k) {
    if (k > n)
        return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(mpq_class(c));
}

} // namespace logicprob
