#include "riroch/graded_class.hpp"

#include <sstream>

namespace riroch {

GradedClass::GradedClass(int dim) : dim_(dim) {
    if (dim < 0)
        throw DomainError("graded class dimension must be non-negative");
    parts_.assign(static_cast<std::size_t>(dim) + 1, TwistPoly());
}

GradedClass GradedClass::unit(int dim) {
    GradedClass g(dim);
    g.part(0) = TwistPoly(1);
    return g;
}

GradedClass GradedClass::hyperplane(int dim) {
    if (dim < 1)
        throw DomainError("hyperplane class needs dimension >= 1");
    GradedClass g(dim);
    g.part(1) = TwistPoly(1);
    return g;
}

const TwistPoly& GradedClass::part(int codim) const {
    if (codim < 0 || codim > dim_)
        throw DomainError("codimension out of range");
    return parts_[static_cast<std::size_t>(codim)];
}

TwistPoly& GradedClass::part(int codim) {
    if (codim < 0 || codim > dim_)
        throw DomainError("codimension out of range");
    return parts_[static_cast<std::size_t>(codim)];
}

bool GradedClass::is_zero() const {
    for (const auto& p : parts_)
        if (!p.is_zero())
            return false;
    return true;
}

void GradedClass::check_same_dim(const GradedClass& o) const {
    if (dim_ != o.dim_)
        throw DimensionMismatch("graded classes have different truncation dimensions (" +
                                std::to_string(dim_) + " vs " + std::to_string(o.dim_) + ")");
}

GradedClass GradedClass::operator-() const {
    GradedClass r = *this;
    for (auto& p : r.parts_)
        p = -p;
    return r;
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
    check_same_dim(o);
    for (int k = 0; k <= dim_; ++k)
        part(k) += o.part(k);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
    check_same_dim(o);
    for (int k = 0; k <= dim_; ++k)
        part(k) -= o.part(k);
    return *this;
}

GradedClass& GradedClass::operator*=(const GradedClass& o) {
    check_same_dim(o);
    GradedClass r(dim_);
    for (int i = 0; i <= dim_; ++i) {
        if (part(i).is_zero())
            continue;
        for (int j = 0; i + j <= dim_; ++j)
            r.part(i + j) += part(i) * o.part(j);
    }
    return *this = r;
}

GradedClass& GradedClass::operator*=(const TwistPoly& c) {
    for (auto& p : parts_)
        p *= c;
    return *this;
}

GradedClass& GradedClass::operator*=(const Rational& c) {
    for (auto& p : parts_)
        p *= c;
    return *this;
}

GradedClass exp_nilpotent(const GradedClass& a) {
    if (!a.part(0).is_zero())
        throw DomainError("exp_nilpotent requires zero part in codimension 0");
    GradedClass result = GradedClass::unit(a.dim());
    GradedClass term = GradedClass::unit(a.dim());
    for (int k = 1; k <= a.dim(); ++k) {
        term *= a;
        result += term * Rational(mpz_class(1), factorial(static_cast<unsigned long>(k)));
    }
    return result;
}

std::string GradedClass::str() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= dim_; ++k) {
        const TwistPoly& p = part(k);
        if (p.is_zero())
            continue;

        // A single N-monomial is printed inline with its sign; anything
        // longer is wrapped in parentheses and treated as positive.
        int nonzero = 0;
        for (int j = 0; j <= p.degree(); ++j)
            if (!p.coeff(j).is_zero())
                ++nonzero;

        if (nonzero == 1) {
            int j = p.degree();
            Rational c = p.coeff(j);
            if (first) {
                if (c.is_negative())
                    out << "-";
                first = false;
            } else {
                out << (c.is_negative() ? " - " : " + ");
            }
            const Rational mag = c.abs();
            std::ostringstream piece;
            bool printed = false;
            if (mag != Rational(1) || (j == 0 && k == 0)) {
                piece << mag.str();
                printed = true;
            }
            if (j > 0) {
                if (printed)
                    piece << "*";
                piece << "N";
                if (j > 1)
                    piece << "^" << j;
                printed = true;
            }
            if (k > 0) {
                if (printed)
                    piece << "*";
                piece << "H";
                if (k > 1)
                    piece << "^" << k;
                printed = true;
            }
            if (!printed)
                piece << "1";
            out << piece.str();
        } else {
            if (first)
                first = false;
            else
                out << " + ";
            out << "(" << p.str() << ")";
            if (k > 0) {
                out << "*H";
                if (k > 1)
                    out << "^" << k;
            }
        }
    }
    return out.str();
}

} // namespace riroch
