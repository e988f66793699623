#include "blanchfield/mk_form.hpp"

#include <utility>
#include <vector>

namespace blanchfield {

namespace {

using Row = std::vector<mpz_class>;

mpz_class form(const IntegerMatrix& s, const Row& x, const Row& y) {
    mpz_class total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) total += x[i] * s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * y[j];
    }
    return total;
}

// x += c * y
void axpy(Row& x, const mpz_class& c, const Row& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * y[i];
}

mpz_class squared_size(const IntegerMatrix& b) {
    mpz_class total = 0;
    for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) total += b(i, j) * b(i, j);
    return total;
}

// Row `target` of p += c * row `source`, and b <- E b E^T for the same E.
void row_op(IntegerMatrix& p, IntegerMatrix& b, Eigen::Index target, Eigen::Index source, long c) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) p(target, j) += c * p(source, j);
    for (Eigen::Index j = 0; j < b.cols(); ++j) b(target, j) += c * b(source, j);
    for (Eigen::Index i = 0; i < b.rows(); ++i) b(i, target) += c * b(i, source);
}

}  // namespace

IntegerMatrix standard_symplectic(Eigen::Index k) {
    IntegerMatrix out = IntegerMatrix::Zero(2 * k, 2 * k);
    for (Eigen::Index i = 0; i < k; ++i) {
        out(i, k + i) = 1;
        out(k + i, i) = -1;
    }
    return out;
}

IntegerMatrix symplectic_normalize(const IntegerMatrix& s) {
    const Eigen::Index n = s.rows();
    if (s.cols() != n) throw InvariantViolation("S square");
    if (n % 2 != 0) throw InvariantViolation("S even size");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (s(i, j) != -s(j, i)) throw InvariantViolation("S skew-symmetric");
    if (determinant(s) != 1) throw InvariantViolation("S unimodular");

    std::vector<Row> basis;
    for (Eigen::Index i = 0; i < n; ++i) {
        Row r(static_cast<std::size_t>(n), mpz_class(0));
        r[static_cast<std::size_t>(i)] = 1;
        basis.push_back(std::move(r));
    }

    std::vector<Row> es, fs;
    while (!basis.empty()) {
        Row e = std::move(basis.front());
        basis.erase(basis.begin());

        // Euclid on the values S(e, b) across the remaining basis.
        while (true) {
            std::size_t best = basis.size();
            mpz_class best_value;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const mpz_class v = form(s, e, basis[i]);
                if (v != 0 && (best == basis.size() || abs(v) < abs(best_value))) {
                    best = i;
                    best_value = v;
                }
            }
            if (best == basis.size()) throw InvariantViolation("S unimodular");
            bool reduced = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (i == best) continue;
                const mpz_class v = form(s, e, basis[i]);
                if (v == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), v.get_mpz_t(), best_value.get_mpz_t());
                axpy(basis[i], -q, basis[best]);
                reduced = true;
            }
            if (!reduced) {
                if (abs(best_value) != 1) throw InvariantViolation("S unimodular");
                Row f = std::move(basis[best]);
                basis.erase(basis.begin() + static_cast<long>(best));
                if (best_value < 0)
                    for (auto& c : f) c = -c;
                // Project the rest onto the orthogonal complement of span(e, f).
                for (auto& g : basis) {
                    const mpz_class gf = form(s, g, f);
                    const mpz_class ge = form(s, g, e);
                    axpy(g, -gf, e);
                    axpy(g, ge, f);
                }
                es.push_back(std::move(e));
                fs.push_back(std::move(f));
                break;
            }
        }
    }

    const Eigen::Index k = n / 2;
    IntegerMatrix p(n, n);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            p(i, j) = es[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            p(k + i, j) = fs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    return p;
}

IntegerMatrix symplectic_reduce(const IntegerMatrix& p, const IntegerMatrix& a) {
    const Eigen::Index n = p.rows(), k = n / 2;
    // Elementary symplectic moves on the basis (e_1..e_k, f_1..f_k), each a
    // pair of row operations {target, source}; the second is absent (-1) for
    // the transvections e_i += f_i and f_i += e_i.
    struct Move {
        Eigen::Index t1, s1, t2, s2;
        long sign2;
    };
    std::vector<Move> moves;
    for (Eigen::Index i = 0; i < k; ++i) {
        moves.push_back({i, k + i, -1, -1, 0});
        moves.push_back({k + i, i, -1, -1, 0});
        for (Eigen::Index j = 0; j < k; ++j) {
            if (i == j) continue;
            moves.push_back({i, j, k + j, k + i, -1});  // e_i += c e_j, f_j -= c f_i
            if (i < j) {
                moves.push_back({i, k + j, j, k + i, 1});      // e_i += c f_j, e_j += c f_i
                moves.push_back({k + i, j, k + j, i, 1});      // f_i += c e_j, f_j += c e_i
            }
        }
    }

    IntegerMatrix q = p;
    IntegerMatrix b = multiply(multiply(q, a), IntegerMatrix(q.transpose()));
    mpz_class size = squared_size(b);
    for (bool improved = true; improved;) {
        improved = false;
        for (const Move& m : moves)
            for (long c : {1L, -1L}) {
                IntegerMatrix q2 = q, b2 = b;
                row_op(q2, b2, m.t1, m.s1, c);
                if (m.t2 >= 0) row_op(q2, b2, m.t2, m.s2, m.sign2 * c);
                const mpz_class size2 = squared_size(b2);
                if (size2 < size) {
                    q = std::move(q2);
                    b = std::move(b2);
                    size = size2;
                    improved = true;
                }
            }
    }
    return q;
}

IntegerMatrix reduced_congruence(const SeifertData& s) {
    const Eigen::Index n = s.size();
    IntegerMatrix skew(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) skew(i, j) = s.a(i, j) - s.a(j, i);
    const IntegerMatrix p = symplectic_reduce(symplectic_normalize(skew), s.a);
    if (multiply(multiply(p, skew), IntegerMatrix(p.transpose())) != standard_symplectic(n / 2))
        throw Error("symplectic reduction lost the standard form");
    return p;
}

MKForm mk_matrix(const SeifertData& s) {
    const Eigen::Index n = s.size();
    const Eigen::Index k = n / 2;
    const IntegerMatrix p = reduced_congruence(s);
    const IntegerMatrix a = multiply(multiply(p, s.a), IntegerMatrix(p.transpose()));

    const RationalFunction t = IntLaurentPoly::t();
    const RationalFunction one_minus_t = RationalFunction(1) - t;
    const RationalFunction one_minus_tinv = RationalFunction(1) - t.inverse();
    // Diagonal scalings of the two terms, indexed by block (first k / last k).
    const auto left_a = [&](Eigen::Index i) { return i < k ? one_minus_tinv.inverse() : RationalFunction(1); };
    const auto right_a = [&](Eigen::Index j) { return j < k ? RationalFunction(1) : one_minus_t; };
    const auto left_at = [&](Eigen::Index i) { return i < k ? RationalFunction(1) : one_minus_tinv; };
    const auto right_at = [&](Eigen::Index j) { return j < k ? one_minus_t.inverse() : RationalFunction(1); };

    LaurentMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const RationalFunction entry = left_a(i) * RationalFunction(IntLaurentPoly(a(i, j))) * right_a(j) +
                                           left_at(i) * RationalFunction(IntLaurentPoly(a(j, i))) * right_at(j);
            if (!entry.in_lambda())
                throw Error("M_K entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " + entry.to_string() +
                            " is not in Lambda");
            m(i, j) = entry.to_laurent();
        }
    if (hermitian_adjoint(m) != m) throw Error("M_K(t) is not hermitian: " + to_string(m));
    if (determinant(m).is_zero()) throw Error("M_K(t) is singular");
    return MKForm{std::move(m), p, a, s};
}

PresentedPairing mk_pairing(const MKForm& m) {
    PresentedPairing out;
    out.label = Provenance::mk;
    out.presentation = m.mk_matrix;
    RationalMatrix inv = inverse(to_rational(conjugate(m.mk_matrix)));
    for (Eigen::Index i = 0; i < inv.rows(); ++i)
        for (Eigen::Index j = 0; j < inv.cols(); ++j) inv(i, j) = -inv(i, j);
    out.pairing_matrix = std::move(inv);
    return out;
}

QModLambdaElem mk_pairing_value(const MKForm& m, const LaurentVector& v, const LaurentVector& w) {
    return pairing_value(mk_pairing(m), v, w);
}

Eigen::MatrixXcd evaluate(const LaurentMatrix& m, std::complex<double> z) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(z);
    return out;
}

}  // namespace blanchfield
