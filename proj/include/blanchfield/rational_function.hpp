#pragma once

#include "blanchfield/laurent.hpp"
#include "blanchfield/polynomial.hpp"

#include <iosfwd>
#include <string>

namespace blanchfield {

/// Element of Q(t), kept as num/den with num, den in Z[t] in lowest terms:
/// gcd(num, den) = 1 over Z[t] (which covers both the Q[t] gcd and the
/// integer contents) and den has positive leading coefficient. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_{1} {}
    RationalFunction(int c) : RationalFunction(IntLaurentPoly(c)) {}  // NOLINT: scalar embedding
    RationalFunction(const IntLaurentPoly& p);                        // NOLINT
    RationalFunction(poly::ZPoly numerator, poly::ZPoly denominator);
    RationalFunction(const IntLaurentPoly& numerator, const IntLaurentPoly& denominator);

    /// The numerator and denominator as polynomials (non-negative exponents).
    const poly::ZPoly& numerator() const noexcept { return num_; }
    const poly::ZPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.empty(); }

    /// True iff the value lies in Lambda = Z[t, t^-1].
    bool in_lambda() const;
    /// The value as a Laurent polynomial; throws unless in_lambda().
    IntLaurentPoly to_laurent() const;

    /// Substitution t -> t^-1.
    RationalFunction conjugate() const;
    RationalFunction inverse() const;

    std::complex<double> evaluate(std::complex<double> z) const;

    /// "(num)/(den)", or just the numerator when den = 1.
    std::string to_string() const;

    RationalFunction& operator+=(const RationalFunction& b);
    RationalFunction& operator-=(const RationalFunction& b);
    RationalFunction& operator*=(const RationalFunction& b);
    RationalFunction& operator/=(const RationalFunction& b);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(RationalFunction a) {
        a.num_ = poly::neg(std::move(a.num_));
        return a;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
    void normalize();

    poly::ZPoly num_;
    poly::ZPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

inline RationalFunction conjugate(const RationalFunction& f) { return f.conjugate(); }
inline RationalFunction exact_quotient(const RationalFunction& a, const RationalFunction& b) { return a / b; }

/// Decides membership of x in Lambda: in lowest terms, the denominator is a
/// power of t.
inline bool lambda_membership(const RationalFunction& x) { return x.in_lambda(); }

/// Renders a Z[t] polynomial in the Laurent grammar.
std::string render_polynomial(const poly::ZPoly& p);

}  // namespace blanchfield
