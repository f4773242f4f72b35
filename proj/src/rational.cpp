#include "riroch/rational.hpp"

namespace riroch {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(mpz_class(text));
        return Rational(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ValidationError("not a rational literal: '" + text + "'");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned long k) const {
    return Rational(int_pow(numerator(), k), int_pow(denominator(), k));
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw DomainError("reciprocal of zero");
    return Rational(denominator(), numerator());
}

std::string Rational::str() const {
    if (is_integer())
        return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class int_pow(const mpz_class& base, unsigned long k) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
    return r;
}

} // namespace riroch
