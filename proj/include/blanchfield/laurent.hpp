#pragma once

#include "blanchfield/polynomial.hpp"

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace blanchfield {

/// Element of Lambda = Z[t, t^-1].
///
/// Stored as t^lowest_exponent * (c_0 + c_1 t + ... + c_n t^n) with c_0 and
/// c_n nonzero; zero has no coefficients and lowest exponent 0. Because the
/// representation is normalized, structural equality is ring equality.
class IntLaurentPoly {
public:
    IntLaurentPoly() = default;
    IntLaurentPoly(int c) : IntLaurentPoly(mpz_class(c)) {}  // NOLINT: scalar embedding
    IntLaurentPoly(long c) : IntLaurentPoly(mpz_class(c)) {}  // NOLINT
    IntLaurentPoly(const mpz_class& c);                        // NOLINT
    IntLaurentPoly(long lowest_exponent, poly::ZPoly coefficients);

    static IntLaurentPoly monomial(const mpz_class& c, long exponent);
    static IntLaurentPoly t() { return monomial(1, 1); }
    static IntLaurentPoly t_inverse() { return monomial(1, -1); }

    /// Parses the rendering grammar, e.g. "t^2 - t + 1", "-2t^-1 + 3".
    static IntLaurentPoly parse(std::string_view text);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long lowest_exponent() const noexcept { return lowest_; }
    long highest_exponent() const noexcept { return lowest_ + static_cast<long>(coeffs_.size()) - 1; }
    const poly::ZPoly& coefficients() const noexcept { return coeffs_; }
    mpz_class coefficient(long exponent) const;

    /// True for the units of Lambda, i.e. +-t^k.
    bool is_unit() const;
    /// True iff the polynomial is constant (possibly zero).
    bool is_constant() const { return is_zero() || (lowest_ == 0 && coeffs_.size() == 1); }

    /// Substitution t -> t^-1.
    IntLaurentPoly conjugate() const;

    std::complex<double> evaluate(std::complex<double> z) const;

    /// Exact quotient in Lambda; throws when b does not divide *this.
    IntLaurentPoly divide_exact(const IntLaurentPoly& b) const;

    std::string to_string() const;

    IntLaurentPoly& operator+=(const IntLaurentPoly& b);
    IntLaurentPoly& operator-=(const IntLaurentPoly& b);
    IntLaurentPoly& operator*=(const IntLaurentPoly& b);

    friend IntLaurentPoly operator+(IntLaurentPoly a, const IntLaurentPoly& b) { return a += b; }
    friend IntLaurentPoly operator-(IntLaurentPoly a, const IntLaurentPoly& b) { return a -= b; }
    friend IntLaurentPoly operator*(IntLaurentPoly a, const IntLaurentPoly& b) { return a *= b; }
    friend IntLaurentPoly operator-(IntLaurentPoly a);

    friend bool operator==(const IntLaurentPoly& a, const IntLaurentPoly& b) {
        return a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntLaurentPoly& a, const IntLaurentPoly& b) { return !(a == b); }

private:
    void normalize();

    long lowest_ = 0;
    poly::ZPoly coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntLaurentPoly& p);

inline IntLaurentPoly conjugate(const IntLaurentPoly& p) { return p.conjugate(); }
inline IntLaurentPoly exact_quotient(const IntLaurentPoly& a, const IntLaurentPoly& b) {
    return a.divide_exact(b);
}

/// One term of a rendered Laurent polynomial.
struct RenderedTerm {
    long exponent;
    int sign;               // +1 or -1
    std::string magnitude;  // absolute value of the coefficient
    bool unit_magnitude;    // magnitude is 1 and may be elided
};

/// Joins terms (already in descending exponent order) with " + " / " - ".
std::string render_terms(const std::vector<RenderedTerm>& terms);

}  // namespace blanchfield
