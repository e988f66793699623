#include "blanchfield/polynomial.hpp"

#include "blanchfield/errors.hpp"

#include <algorithm>
#include <utility>

namespace blanchfield::poly {

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

ZPoly neg(ZPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

ZPoly scale(ZPoly a, const mpz_class& c) {
    if (c == 0) return {};
    for (auto& x : a) x *= c;
    return a;
}

ZPoly shift(const ZPoly& a, long k) {
    if (a.empty() || k == 0) return a;
    ZPoly r(static_cast<std::size_t>(k), mpz_class(0));
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

ZPoly reverse(const ZPoly& a) {
    ZPoly r(a.rbegin(), a.rend());
    trim(r);
    return r;
}

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& a) {
    if (a.empty()) return {};
    const mpz_class g = content(a);
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw DivisionByZero();
    ZPoly r = a;
    const long db = degree(b);
    const mpz_class& lb = b.back();
    while (degree(r) >= db) {
        const long shiftBy = degree(r) - db;
        const mpz_class lr = r.back();
        for (auto& c : r) c *= lb;
        for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shiftBy)] -= lr * b[static_cast<std::size_t>(i)];
        trim(r);
    }
    return r;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.empty() && b.empty()) return {};
    mpz_class cg;
    const mpz_class ca = content(a), cb = content(b);
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    ZPoly x = primitive_part(a), y = primitive_part(b);
    if (degree(x) < degree(y)) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = primitive_part(r);
    }
    ZPoly g = scale(primitive_part(x), cg);
    if (!g.empty() && g.back() < 0) g = neg(std::move(g));
    return g;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
    if (b.empty()) throw DivisionByZero();
    quotient.clear();
    if (a.empty()) return true;
    if (degree(a) < degree(b)) return false;
    ZPoly r = a;
    const long db = degree(b);
    quotient.assign(static_cast<std::size_t>(degree(a) - db + 1), mpz_class(0));
    const mpz_class& lb = b.back();
    while (!r.empty() && degree(r) >= db) {
        const long k = degree(r) - db;
        if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
        quotient[static_cast<std::size_t>(k)] = q;
        for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + k)] -= q * b[static_cast<std::size_t>(i)];
        trim(r);
    }
    trim(quotient);
    return r.empty();
}

long t_valuation(const ZPoly& a) {
    long k = 0;
    while (static_cast<std::size_t>(k) < a.size() && a[static_cast<std::size_t>(k)] == 0) ++k;
    return k;
}

QPoly to_q(const ZPoly& a) {
    QPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpq_class(a[i]);
    return r;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly scale(QPoly a, const mpq_class& c) {
    if (c == 0) return {};
    for (auto& x : a) x *= c;
    return a;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder) {
    if (b.empty()) throw DivisionByZero();
    remainder = a;
    quotient.clear();
    const long db = degree(b);
    if (degree(a) < db) return;
    quotient.assign(static_cast<std::size_t>(degree(a) - db + 1), mpq_class(0));
    while (!remainder.empty() && degree(remainder) >= db) {
        const long k = degree(remainder) - db;
        const mpq_class q = remainder.back() / b.back();
        quotient[static_cast<std::size_t>(k)] = q;
        for (long i = 0; i <= db; ++i) remainder[static_cast<std::size_t>(i + k)] -= q * b[static_cast<std::size_t>(i)];
        trim(remainder);
    }
    trim(quotient);
}

void clear_denominators(const QPoly& a, ZPoly& numerator, mpz_class& denominator) {
    denominator = 1;
    for (const auto& c : a) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), c.get_den_mpz_t());
    numerator.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_class scaled = denominator / a[i].get_den();
        numerator[i] = a[i].get_num() * scaled;
    }
    trim(numerator);
}

}  // namespace blanchfield::poly
