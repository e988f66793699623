#pragma once

// Dense univariate polynomials over Z and Q, stored low degree first.
// These are the building blocks behind IntLaurentPoly, RationalFunction and
// the canonical forms of Q/Lambda. An empty vector is the zero polynomial;
// every routine returns trimmed results (no trailing zero coefficients).

#include <gmpxx.h>

#include <vector>

namespace blanchfield::poly {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(ZPoly& p);
void trim(QPoly& p);

/// Degree of p; -1 for the zero polynomial.
inline long degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }
inline long degree(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly neg(ZPoly a);
ZPoly scale(ZPoly a, const mpz_class& c);
ZPoly shift(const ZPoly& a, long k);  // multiply by t^k, k >= 0

/// Coefficients in reverse order: t^deg(a) * a(1/t) when a(0) != 0.
ZPoly reverse(const ZPoly& a);

/// Non-negative gcd of the coefficients; 0 for the zero polynomial.
mpz_class content(const ZPoly& a);
/// a / content(a), sign preserved.
ZPoly primitive_part(const ZPoly& a);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

/// gcd over Z[t], normalized to positive leading coefficient. gcd(0, 0) = 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Exact quotient a / b over Z[t]. Returns false when b does not divide a.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

/// Number of trailing powers of t dividing a (a nonzero).
long t_valuation(const ZPoly& a);

QPoly to_q(const ZPoly& a);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(QPoly a, const mpq_class& c);

/// Euclidean division over Q[t]; b nonzero.
void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder);

/// Writes a = numerator / denominator with numerator in Z[t] and the
/// positive integer denominator equal to the lcm of the coefficient denominators.
void clear_denominators(const QPoly& a, ZPoly& numerator, mpz_class& denominator);

}  // namespace blanchfield::poly
