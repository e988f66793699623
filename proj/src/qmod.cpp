#include "blanchfield/qmod.hpp"

#include "blanchfield/errors.hpp"

#include <ostream>

namespace blanchfield {

namespace {

mpq_class fractional_part(const mpq_class& c) {
    mpz_class floor;
    mpz_fdiv_q(floor.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    return c - floor;
}

// Divides r by t modulo q, where q(0) != 0: subtract the multiple of q that
// kills the constant term, then shift down.
poly::QPoly divide_by_t_mod(const poly::QPoly& r, const poly::QPoly& q) {
    if (r.empty()) return r;
    poly::QPoly s = poly::sub(r, poly::scale(q, r[0] / q[0]));
    if (!s.empty()) s.erase(s.begin());
    return s;
}

}  // namespace

QModLambdaElem QModLambdaElem::canonicalize(const RationalFunction& x) {
    QModLambdaElem out;
    if (x.is_zero()) return out;

    // x = N / (t^m q) with q(0) != 0.
    const poly::ZPoly& den = x.denominator();
    const long m = poly::t_valuation(den);
    const poly::ZPoly q(den.begin() + m, den.end());
    const poly::QPoly n = poly::to_q(x.numerator());
    const poly::QPoly qq = poly::to_q(q);

    poly::QPoly laurent_num;  // L = laurent_num * t^-m
    poly::QPoly r;
    if (poly::degree(q) == 0) {
        laurent_num = poly::scale(n, mpq_class(1) / qq[0]);
    } else {
        // r = N t^-m mod q, then L = (N - r t^m) / (t^m q).
        poly::QPoly quotient;
        poly::divmod(n, qq, quotient, r);
        for (long i = 0; i < m; ++i) r = divide_by_t_mod(r, qq);
        poly::QPoly shifted_r(static_cast<std::size_t>(m), mpq_class(0));
        shifted_r.insert(shifted_r.end(), r.begin(), r.end());
        poly::trim(shifted_r);
        poly::QPoly remainder;
        poly::divmod(poly::sub(n, shifted_r), qq, laurent_num, remainder);
        if (!remainder.empty()) throw Error("internal error: partial fraction split is inexact");
    }

    for (auto& c : laurent_num) c = fractional_part(c);
    poly::trim(laurent_num);
    long lowest = -m;
    std::size_t leading_zeros = 0;
    while (leading_zeros < laurent_num.size() && laurent_num[leading_zeros] == 0) ++leading_zeros;
    laurent_num.erase(laurent_num.begin(), laurent_num.begin() + static_cast<long>(leading_zeros));
    lowest += static_cast<long>(leading_zeros);
    if (!laurent_num.empty()) {
        out.fractional_lowest_ = lowest;
        out.fractional_ = std::move(laurent_num);
    }

    if (!r.empty()) {
        // gcd(r, q) = 1 already: gcd(N, q) = 1 and t is invertible mod q.
        const mpz_class c = poly::content(q);
        out.proper_den_ = poly::primitive_part(q);
        out.proper_num_ = poly::scale(r, mpq_class(1) / mpq_class(c));
    }
    return out;
}

RationalFunction QModLambdaElem::representative() const {
    RationalFunction result;
    if (!fractional_.empty()) {
        poly::ZPoly num;
        mpz_class scale;
        poly::clear_denominators(fractional_, num, scale);
        RationalFunction laurent(IntLaurentPoly(fractional_lowest_, num), IntLaurentPoly(scale));
        result += laurent;
    }
    if (!proper_num_.empty()) {
        poly::ZPoly num;
        mpz_class scale;
        poly::clear_denominators(proper_num_, num, scale);
        result += RationalFunction(num, poly::scale(proper_den_, scale));
    }
    return result;
}

QModLambdaElem QModLambdaElem::conjugate() const { return canonicalize(representative().conjugate()); }

std::string QModLambdaElem::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (!fractional_.empty()) {
        std::vector<RenderedTerm> terms;
        for (long i = static_cast<long>(fractional_.size()) - 1; i >= 0; --i) {
            const mpq_class& c = fractional_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            terms.push_back({fractional_lowest_ + i, 1, "(" + c.get_str() + ")", false});
        }
        out = render_terms(terms);
    }
    if (!proper_num_.empty()) {
        poly::ZPoly num;
        mpz_class scale;
        poly::clear_denominators(proper_num_, num, scale);
        if (!out.empty()) out += " + ";
        out += "(" + render_polynomial(num) + ")/(" + render_polynomial(poly::scale(proper_den_, scale)) + ")";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const QModLambdaElem& a) { return os << a.to_string(); }

}  // namespace blanchfield
