#include "blanchfield/rational_function.hpp"

#include "blanchfield/errors.hpp"

#include <ostream>

namespace blanchfield {

namespace {

// Splits a Laurent polynomial p as (polynomial part) / t^k with k >= 0.
void split_laurent(const IntLaurentPoly& p, poly::ZPoly& polynomial, long& t_power) {
    if (p.lowest_exponent() >= 0) {
        polynomial = poly::shift(p.coefficients(), p.lowest_exponent());
        t_power = 0;
    } else {
        polynomial = p.coefficients();
        t_power = -p.lowest_exponent();
    }
}

poly::ZPoly t_power_poly(long k) { return poly::shift(poly::ZPoly{1}, k); }

}  // namespace

RationalFunction::RationalFunction(const IntLaurentPoly& p) {
    long k = 0;
    split_laurent(p, num_, k);
    den_ = t_power_poly(k);
    if (num_.empty()) den_ = {1};
}

RationalFunction::RationalFunction(poly::ZPoly numerator, poly::ZPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    poly::trim(num_);
    poly::trim(den_);
    normalize();
}

RationalFunction::RationalFunction(const IntLaurentPoly& numerator, const IntLaurentPoly& denominator) {
    if (denominator.is_zero()) throw DivisionByZero();
    *this = RationalFunction(numerator) / RationalFunction(denominator);
}

void RationalFunction::normalize() {
    if (den_.empty()) throw DivisionByZero();
    if (num_.empty()) {
        den_ = {1};
        return;
    }
    const poly::ZPoly g = poly::gcd(num_, den_);
    if (g.size() != 1 || g[0] != 1) {
        poly::ZPoly q;
        poly::divide_exact(num_, g, q);
        num_ = std::move(q);
        poly::divide_exact(den_, g, q);
        den_ = std::move(q);
    }
    if (den_.back() < 0) {
        num_ = poly::neg(std::move(num_));
        den_ = poly::neg(std::move(den_));
    }
}

bool RationalFunction::in_lambda() const {
    // den is a monomial c t^k with c > 0; lowest terms forces c = 1 when the
    // value is in Lambda.
    return den_.back() == 1 && poly::t_valuation(den_) == poly::degree(den_);
}

IntLaurentPoly RationalFunction::to_laurent() const {
    if (!in_lambda()) throw Error("rational function " + to_string() + " is not in Lambda");
    return IntLaurentPoly(-poly::degree(den_), num_);
}

RationalFunction RationalFunction::conjugate() const {
    if (is_zero()) return {};
    // p(1/t) = t^-deg(p) rev(p), so num(1/t)/den(1/t) = t^(deg den - deg num) rev(num)/rev(den).
    poly::ZPoly n = poly::reverse(num_);
    poly::ZPoly d = poly::reverse(den_);
    const long e = poly::degree(den_) - poly::degree(num_);
    if (e >= 0) n = poly::shift(n, e);
    else d = poly::shift(d, -e);
    return RationalFunction(std::move(n), std::move(d));
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RationalFunction(den_, num_);
}

std::complex<double> RationalFunction::evaluate(std::complex<double> z) const {
    return IntLaurentPoly(0, num_).evaluate(z) / IntLaurentPoly(0, den_).evaluate(z);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& b) {
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    if (den_ == b.den_) {
        num_ = poly::add(num_, b.num_);
    } else {
        num_ = poly::add(poly::mul(num_, b.den_), poly::mul(b.num_, den_));
        den_ = poly::mul(den_, b.den_);
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& b) { return *this += -b; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& b) {
    if (is_zero() || b.is_zero()) return *this = RationalFunction();
    num_ = poly::mul(num_, b.num_);
    den_ = poly::mul(den_, b.den_);
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& b) { return *this *= b.inverse(); }

std::string render_polynomial(const poly::ZPoly& p) { return IntLaurentPoly(0, p).to_string(); }

std::string RationalFunction::to_string() const {
    if (den_ == poly::ZPoly{1}) return render_polynomial(num_);
    return "(" + render_polynomial(num_) + ")/(" + render_polynomial(den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace blanchfield
