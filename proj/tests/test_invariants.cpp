#include "doctest.h"

#include "blanchfield/catalog.hpp"
#include "blanchfield/errors.hpp"
#include "blanchfield/invariants.hpp"

#include <numbers>

using namespace blanchfield;

namespace {

IntegerMatrix mat2(long a, long b, long c, long d) {
    IntegerMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

const SeifertData trefoil = SeifertData::make(mat2(-1, 1, 0, -1));
const SeifertData figure_eight = SeifertData::make(mat2(1, 1, 0, -1));

mpz_class at_one(const IntLaurentPoly& p) {
    mpz_class s = 0;
    for (const auto& c : p.coefficients()) s += c;
    return s;
}

}  // namespace

TEST_CASE("Alexander polynomials by hand") {
    // det(tA - A^T) for the trefoil is t^2 - t + 1; for the figure-eight
    // [[0, t], [-1, 1 - t]] gives -t^2 + 3t - 1 after the sign fix.
    CHECK(alexander_polynomial(trefoil).to_string() == "t - 1 + t^-1");
    CHECK(alexander_polynomial(figure_eight).to_string() == "-t + 3 - t^-1");
    CHECK(at_one(alexander_polynomial(figure_eight)) == 1);
    CHECK(alexander_polynomial(SeifertData::make(IntegerMatrix(0, 0))) == IntLaurentPoly(1));
}

TEST_CASE("signatures at z = -1 by hand") {
    // 2(A + A^T): trefoil [[-4, 2], [2, -4]] is negative definite; figure-eight
    // [[4, 2], [2, -4]] has determinant -20.
    CHECK(levine_tristram_signature(trefoil, -1.0) == -2);
    CHECK(levine_tristram_signature(figure_eight, -1.0) == 0);
    CHECK(levine_tristram_signature(SeifertData::make(IntegerMatrix(0, 0)), -1.0) == 0);
}

TEST_CASE("trefoil profile jumps at pi/3") {
    // det H = 2(1 - cos theta)(1 - 2 cos theta) vanishes at theta = pi/3.
    const auto profile = signature_profile(trefoil, 3);
    REQUIRE(profile.size() == 3);
    CHECK(profile[0].signature == 0);
    CHECK(profile[1].signature == -2);
    CHECK(profile[2].signature == -2);
    CHECK(profile[1].angle == doctest::Approx(std::numbers::pi / 2));
    CHECK_THROWS_AS(levine_tristram_signature(trefoil, std::polar(1.0, std::numbers::pi / 3)), Indeterminate);
}

TEST_CASE("signature domain errors") {
    CHECK_THROWS_AS(levine_tristram_signature(trefoil, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(levine_tristram_signature(trefoil, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(signature_profile(trefoil, 0), std::invalid_argument);
}

TEST_CASE("hermitian signature") {
    Eigen::MatrixXcd h(2, 2);
    h << 2.0, std::complex<double>(0, 1), std::complex<double>(0, -1), -3.0;
    CHECK(hermitian_signature(h) == 0);
    h << 1.0, 1.0, 1.0, 1.0;
    CHECK_THROWS_AS(hermitian_signature(h), Indeterminate);
    CHECK(hermitian_signature(Eigen::MatrixXcd(0, 0)) == 0);
}

TEST_CASE("property: Alexander normalization and S-equivalence") {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int g = trial % 4;
        const SeifertData s = random_seifert(g, 3, rng);
        const IntLaurentPoly delta = alexander_polynomial(s);
        CHECK(delta == delta.conjugate());
        CHECK(at_one(delta) == 1);
        if (g == 0) continue;
        IntegerMatrix xi(2 * g, 1);
        for (int i = 0; i < 2 * g; ++i) xi(i, 0) = static_cast<long>(rng() % 5) - 2;
        CHECK(alexander_polynomial(stabilize(s, xi, StabilizationKind::upper)) == delta);
        CHECK(alexander_polynomial(stabilize(s, xi, StabilizationKind::lower)) == delta);
        const IntegerMatrix q = random_unimodular(2 * g, rng);
        CHECK(alexander_polynomial(SeifertData::make(multiply(multiply(q, s.a), IntegerMatrix(q.transpose())))) ==
              delta);
    }
}

TEST_CASE("property: signatures are even and match M_K") {
    Rng rng(42);
    int compared = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const SeifertData s = random_seifert(1 + trial % 3, 3, rng);
        const MKForm m = mk_matrix(s);
        for (int j = 1; j <= 6; ++j) {
            const auto z = std::polar(1.0, 0.9 * j);
            try {
                const int lt = levine_tristram_signature(s, z);
                CHECK(lt % 2 == 0);
                CHECK(mk_signature(m, z) == lt);
                ++compared;
            } catch (const Indeterminate&) {
            }
        }
    }
    CHECK(compared > 200);
}
