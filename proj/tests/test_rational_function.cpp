#include "doctest.h"

#include "blanchfield/catalog.hpp"
#include "blanchfield/errors.hpp"
#include "blanchfield/rational_function.hpp"

using blanchfield::IntLaurentPoly;
using blanchfield::RationalFunction;

namespace {

RationalFunction R(std::string_view num, std::string_view den) {
    return RationalFunction(IntLaurentPoly::parse(num), IntLaurentPoly::parse(den));
}

}  // namespace

TEST_CASE("lowest terms and sign") {
    const auto f = R("t^2 - 1", "-2t + 2");  // = -(t + 1)/2
    CHECK(f.numerator() == blanchfield::poly::ZPoly{-1, -1});
    CHECK(f.denominator() == blanchfield::poly::ZPoly{2});
    CHECK(f.to_string() == "(-t - 1)/(2)");
    CHECK(R("t", "t").to_string() == "1");
}

TEST_CASE("Laurent polynomials embed") {
    const RationalFunction f(IntLaurentPoly::parse("t^-1 + 2"));
    CHECK(f.in_lambda());
    CHECK(f.to_laurent() == IntLaurentPoly::parse("t^-1 + 2"));
    CHECK_FALSE(R("1", "2").in_lambda());
    CHECK_FALSE(R("1", "t - 1").in_lambda());
    CHECK(R("t^2 - t", "t - 1").in_lambda());
}

TEST_CASE("conjugation by hand") {
    // conj(1/(t - 2)) = 1/(t^-1 - 2) = t/(1 - 2t)
    CHECK(R("1", "t - 2").conjugate() == R("t", "1 - 2t"));
    CHECK(R("t", "t^2 - t + 1").conjugate() == R("t", "t^2 - t + 1"));
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(RationalFunction(0).inverse(), blanchfield::DivisionByZero);
    CHECK_THROWS_AS(R("1", "0"), blanchfield::DivisionByZero);
}

TEST_CASE("property: field axioms and involution") {
    blanchfield::Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        auto pick = [&] {
            IntLaurentPoly d = blanchfield::random_laurent(rng);
            if (d.is_zero()) d = 1;
            return RationalFunction(blanchfield::random_laurent(rng), d);
        };
        const auto a = pick(), b = pick(), c = pick();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        CHECK(a.conjugate().conjugate() == a);
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(b * b.inverse() == RationalFunction(1));
        }
        const std::complex<double> z = std::polar(1.0, 1.1);
        if (!b.is_zero()) CHECK(std::abs((a * b).evaluate(z) - a.evaluate(z) * b.evaluate(z)) < 1e-8);
        CHECK(std::abs(a.conjugate().evaluate(z) - std::conj(a.evaluate(z))) < 1e-8);
    }
}
