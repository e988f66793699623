#pragma once

#include "blanchfield/laurent.hpp"
#include "blanchfield/polynomial.hpp"
#include "blanchfield/rational_function.hpp"

#include <iosfwd>
#include <string>

namespace blanchfield {

/// A class in Q/Lambda, stored in the canonical form
///
///     x + Lambda = L + r/q + Lambda
///
/// where q in Z[t] is primitive with positive leading coefficient and
/// q(0) != 0, r in Q[t] has deg r < deg q and gcd(r, q) = 1, and L is a
/// Laurent polynomial with rational coefficients, each reduced into [0, 1).
/// A proper fraction r/q with q(0) != 0 is never a nonzero Laurent polynomial,
/// so (L, r, q) determines the class and two representatives differ by an
/// element of Lambda iff their canonical forms coincide.
class QModLambdaElem {
public:
    /// The zero class.
    QModLambdaElem() : proper_den_{1} {}

    static QModLambdaElem canonicalize(const RationalFunction& x);

    bool is_zero() const noexcept { return fractional_.empty() && proper_num_.empty(); }

    long fractional_lowest_exponent() const noexcept { return fractional_lowest_; }
    /// Coefficients of L, lowest exponent first; each in [0, 1).
    const poly::QPoly& fractional_laurent() const noexcept { return fractional_; }
    const poly::QPoly& proper_numerator() const noexcept { return proper_num_; }
    const poly::ZPoly& proper_denominator() const noexcept { return proper_den_; }

    /// A rational function in this class (namely L + r/q).
    RationalFunction representative() const;

    /// Class of the conjugate of any representative.
    QModLambdaElem conjugate() const;

    std::string to_string() const;

    friend QModLambdaElem operator+(const QModLambdaElem& a, const QModLambdaElem& b) {
        return canonicalize(a.representative() + b.representative());
    }
    friend QModLambdaElem operator-(const QModLambdaElem& a, const QModLambdaElem& b) {
        return canonicalize(a.representative() - b.representative());
    }
    friend QModLambdaElem operator*(const IntLaurentPoly& p, const QModLambdaElem& a) {
        return canonicalize(RationalFunction(p) * a.representative());
    }

    friend bool operator==(const QModLambdaElem& a, const QModLambdaElem& b) {
        return a.fractional_lowest_ == b.fractional_lowest_ && a.fractional_ == b.fractional_ &&
               a.proper_num_ == b.proper_num_ && a.proper_den_ == b.proper_den_;
    }
    friend bool operator!=(const QModLambdaElem& a, const QModLambdaElem& b) { return !(a == b); }

private:
    long fractional_lowest_ = 0;
    poly::QPoly fractional_;
    poly::QPoly proper_num_;
    poly::ZPoly proper_den_;
};

inline QModLambdaElem qmod_canonicalize(const RationalFunction& x) { return QModLambdaElem::canonicalize(x); }

std::ostream& operator<<(std::ostream& os, const QModLambdaElem& a);

}  // namespace blanchfield
