#pragma once

// Eigen plumbing for the exact scalar types, plus exact dense linear algebra
// (determinant, inverse, solve) written as free function templates over
// Eigen matrices. Eigen's own decompositions pivot on magnitudes, which these
// rings do not have, so elimination is done here with first-nonzero pivoting.

#include "blanchfield/errors.hpp"
#include "blanchfield/laurent.hpp"
#include "blanchfield/rational_function.hpp"

#include <Eigen/Core>
#include <gmpxx.h>

#include <string>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpq_class;
    using Literal = mpz_class;
    using Nested = mpz_class;
    enum { IsInteger = 1, IsSigned = 1, IsComplex = 0, RequireInitialization = 1, ReadCost = 4, AddCost = 8, MulCost = 16 };
    static int digits10() { return 0; }  // exact; only consulted by Eigen's printer
};

template <>
struct NumTraits<blanchfield::IntLaurentPoly> : GenericNumTraits<blanchfield::IntLaurentPoly> {
    using Real = blanchfield::IntLaurentPoly;
    using NonInteger = blanchfield::RationalFunction;
    using Literal = blanchfield::IntLaurentPoly;
    using Nested = blanchfield::IntLaurentPoly;
    enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1, ReadCost = 8, AddCost = 32, MulCost = 128 };
    static int digits10() { return 0; }
};

template <>
struct NumTraits<blanchfield::RationalFunction> : GenericNumTraits<blanchfield::RationalFunction> {
    using Real = blanchfield::RationalFunction;
    using NonInteger = blanchfield::RationalFunction;
    using Literal = blanchfield::RationalFunction;
    using Nested = blanchfield::RationalFunction;
    enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1, ReadCost = 8, AddCost = 256, MulCost = 256 };
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace blanchfield {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = MatrixX<mpz_class>;
using LaurentMatrix = MatrixX<IntLaurentPoly>;
using RationalMatrix = MatrixX<RationalFunction>;
using LaurentVector = VectorX<IntLaurentPoly>;
using RationalVector = VectorX<RationalFunction>;

inline mpz_class exact_quotient(const mpz_class& a, const mpz_class& b) {
    if (b == 0) throw DivisionByZero();
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool is_zero(const mpz_class& a) { return a == 0; }
inline bool is_zero(const IntLaurentPoly& a) { return a.is_zero(); }
inline bool is_zero(const RationalFunction& a) { return a.is_zero(); }

inline mpz_class conjugate(const mpz_class& a) { return a; }

/// Integer matrix lifted to constant Laurent polynomials.
inline LaurentMatrix to_laurent(const IntegerMatrix& m) {
    LaurentMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = IntLaurentPoly(m(i, j));
    return out;
}

inline RationalMatrix to_rational(const LaurentMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = RationalFunction(m(i, j));
    return out;
}

/// Entrywise t -> t^-1.
template <typename Derived>
MatrixX<typename Derived::Scalar> conjugate(const Eigen::MatrixBase<Derived>& m) {
    return m.unaryExpr([](const typename Derived::Scalar& x) { return conjugate(x); });
}

/// Conjugate transpose with respect to t -> t^-1.
template <typename Derived>
MatrixX<typename Derived::Scalar> hermitian_adjoint(const Eigen::MatrixBase<Derived>& m) {
    return conjugate(m).transpose();
}

/// Exact determinant by fraction-free (Bareiss) elimination. Over a field the
/// exact quotient is ordinary division; over Lambda and Z every division is
/// exact by Sylvester's identity. The 0x0 determinant is 1.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    if (input.rows() != input.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    MatrixX<Scalar> m = input;
    const Eigen::Index n = m.rows();
    Scalar previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = k;
        while (pivot < n && is_zero(m(pivot, k))) ++pivot;
        if (pivot == n) return Scalar(0);
        if (pivot != k) {
            m.row(k).swap(m.row(pivot));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
            m(i, k) = Scalar(0);
        }
        previous = m(k, k);
    }
    Scalar det = n == 0 ? Scalar(1) : m(n - 1, n - 1);
    return negate ? Scalar(-det) : det;
}

/// Solves M X = B over a field by Gauss-Jordan elimination, pivoting on the
/// first nonzero entry of each column.
template <typename DerivedM, typename DerivedB>
MatrixX<typename DerivedM::Scalar> solve(const Eigen::MatrixBase<DerivedM>& lhs,
                                         const Eigen::MatrixBase<DerivedB>& rhs) {
    using Scalar = typename DerivedM::Scalar;
    if (lhs.rows() != lhs.cols()) throw DimensionMismatch("solve with a non-square matrix");
    if (rhs.rows() != lhs.rows()) throw DimensionMismatch("solve: right-hand side has the wrong number of rows");
    const Eigen::Index n = lhs.rows();
    MatrixX<Scalar> m = lhs;
    MatrixX<Scalar> x = rhs;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = k;
        while (pivot < n && is_zero(m(pivot, k))) ++pivot;
        if (pivot == n) throw SingularMatrix();
        if (pivot != k) {
            m.row(k).swap(m.row(pivot));
            x.row(k).swap(x.row(pivot));
        }
        const Scalar inv = Scalar(1) / m(k, k);
        for (Eigen::Index j = k; j < n; ++j) m(k, j) = m(k, j) * inv;
        for (Eigen::Index j = 0; j < x.cols(); ++j) x(k, j) = x(k, j) * inv;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == k || is_zero(m(i, k))) continue;
            const Scalar f = m(i, k);
            for (Eigen::Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
        }
    }
    return x;
}

template <typename Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    return solve(m, MatrixX<Scalar>::Identity(m.rows(), m.rows()));
}

/// Exact matrix product; avoids Eigen's blocked kernels, which assume
/// trivially copyable scalars for some paths.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> multiply(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product dimension mismatch");
    MatrixX<Scalar> out(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            Scalar acc(0);
            for (Eigen::Index k = 0; k < a.cols(); ++k)
                if (!is_zero(a(i, k)) && !is_zero(b(k, j))) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

/// Renders a matrix as [[a, b], [c, d]] using each entry's to_string().
template <typename Derived, typename Render>
std::string render_matrix(const Eigen::MatrixBase<Derived>& m, Render render) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i > 0) out += ", ";
        out += "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ", ";
            out += render(m(i, j));
        }
        out += "]";
    }
    return out + "]";
}

inline std::string to_string(const IntegerMatrix& m) {
    return render_matrix(m, [](const mpz_class& x) { return x.get_str(); });
}
inline std::string to_string(const LaurentMatrix& m) {
    return render_matrix(m, [](const IntLaurentPoly& x) { return x.to_string(); });
}
inline std::string to_string(const RationalMatrix& m) {
    return render_matrix(m, [](const RationalFunction& x) { return x.to_string(); });
}

}  // namespace blanchfield
