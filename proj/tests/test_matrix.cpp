#include "doctest.h"

#include "oracles.hpp"

#include "blanchfield/errors.hpp"
#include "blanchfield/matrix.hpp"

using namespace blanchfield;

TEST_CASE("determinant of small integer matrices") {
    IntegerMatrix a(2, 2);
    a << -1, 1, 0, -1;
    CHECK(determinant(a) == 1);
    CHECK(determinant(IntegerMatrix(0, 0)) == 1);
    IntegerMatrix s(3, 3);
    s << 2, 0, 1, 1, 3, 2, 1, 1, 2;
    CHECK(determinant(s) == 6);  // 2(6 - 2) - 0 + 1(1 - 3)
    CHECK_THROWS_AS(determinant(IntegerMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("trefoil presentation determinant by hand") {
    // A - tA^T = [[t - 1, 1], [-t, t - 1]], det = (t - 1)^2 + t = t^2 - t + 1.
    LaurentMatrix m(2, 2);
    m << IntLaurentPoly::parse("t - 1"), IntLaurentPoly(1), IntLaurentPoly::parse("-t"), IntLaurentPoly::parse("t - 1");
    CHECK(determinant(m) == IntLaurentPoly::parse("t^2 - t + 1"));
}

TEST_CASE("pivoting past a zero leading entry") {
    IntegerMatrix a(3, 3);
    a << 0, 1, 0, 1, 0, 0, 0, 0, 5;
    CHECK(determinant(a) == -5);
    IntegerMatrix b(2, 2);
    b << 1, 2, 2, 4;
    CHECK(determinant(b) == 0);
}

TEST_CASE("property: Bareiss agrees with the Leibniz oracle") {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 5);
        const IntegerMatrix m = oracle::random_integer_matrix(rng, n, n, trial % 3 == 0 ? 1 : 20);
        CHECK(determinant(m) == oracle::leibniz_determinant(m));
    }
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const LaurentMatrix m = oracle::random_laurent_matrix(rng, n);
        CHECK(determinant(m) == oracle::leibniz_determinant(m));
        const RationalMatrix r = to_rational(m);
        CHECK(determinant(r) == RationalFunction(oracle::leibniz_determinant(m)));
    }
}

TEST_CASE("property: inverse and solve over Q(t)") {
    Rng rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
        const RationalMatrix m = to_rational(oracle::random_laurent_matrix(rng, n));
        if (determinant(m).is_zero()) {
            CHECK_THROWS_AS(inverse(m), SingularMatrix);
            continue;
        }
        const RationalMatrix inv = inverse(m);
        const RationalMatrix id = multiply(m, inv);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) CHECK(id(i, j) == RationalFunction(i == j ? 1 : 0));
        const RationalMatrix b = to_rational(oracle::random_laurent_matrix(rng, n).leftCols(1));
        const RationalMatrix x = solve(m, b);
        CHECK(multiply(m, x) == b);
    }
}

TEST_CASE("singular solve throws") {
    IntegerMatrix m(2, 2);
    m << 1, 2, 2, 4;
    CHECK_THROWS_AS(inverse(to_rational(to_laurent(m))), SingularMatrix);
}

TEST_CASE("conjugate transpose and rendering") {
    LaurentMatrix m(1, 2);
    m << IntLaurentPoly::t(), IntLaurentPoly(2);
    const LaurentMatrix h = hermitian_adjoint(m);
    CHECK(h.rows() == 2);
    CHECK(h(0, 0) == IntLaurentPoly::t_inverse());
    CHECK(to_string(m) == "[[t, 2]]");
    CHECK(to_string(LaurentMatrix(0, 0)) == "[]");
}
