#include "riroch/twist_poly.hpp"

#include <sstream>

namespace riroch {

TwistPoly::TwistPoly(const Rational& constant) {
    if (!constant.is_zero())
        c_.push_back(constant);
}

TwistPoly TwistPoly::variable() {
    return monomial(1, Rational(1));
}

TwistPoly TwistPoly::monomial(int exponent, const Rational& c) {
    TwistPoly p;
    if (exponent < 0)
        throw DomainError("polynomial exponent must be non-negative");
    if (!c.is_zero()) {
        p.c_.assign(static_cast<std::size_t>(exponent) + 1, Rational(0));
        p.c_.back() = c;
    }
    return p;
}

TwistPoly TwistPoly::from_coefficients(std::vector<Rational> coeffs) {
    TwistPoly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

Rational TwistPoly::coeff(int k) const {
    if (k < 0 || k > degree())
        return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

void TwistPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

TwistPoly TwistPoly::operator-() const {
    TwistPoly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

TwistPoly& TwistPoly::operator+=(const TwistPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    normalize();
    return *this;
}

TwistPoly& TwistPoly::operator-=(const TwistPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    normalize();
    return *this;
}

TwistPoly& TwistPoly::operator*=(const TwistPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    normalize();
    return *this;
}

TwistPoly& TwistPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= c;
    return *this;
}

TwistPoly TwistPoly::pow(unsigned k) const {
    TwistPoly r(Rational(1));
    for (unsigned i = 0; i < k; ++i)
        r *= *this;
    return r;
}

Rational TwistPoly::eval(const Rational& at) const {
    Rational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;)
        acc = acc * at + c_[k];
    return acc;
}

std::string TwistPoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (c.is_zero())
            continue;
        if (first) {
            if (c.is_negative())
                out << "-";
            first = false;
        } else {
            out << (c.is_negative() ? " - " : " + ");
        }
        const Rational mag = c.abs();
        if (k == 0) {
            out << mag.str();
        } else {
            if (mag != Rational(1))
                out << mag.str() << "*";
            out << var;
            if (k > 1)
                out << "^" << k;
        }
    }
    return out.str();
}

} // namespace riroch
