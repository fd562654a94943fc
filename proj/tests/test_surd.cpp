#include "nccc/surd.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using nccc::Rational;
using nccc::Surd;

TEST_CASE("square factors are extracted from the radicand") {
    CHECK(Surd::make(0, 1, 25) == Surd(5));
    CHECK(Surd::make(0, 1, 12) == Surd::make(0, 2, 3));
    CHECK(Surd::make(Rational(1, 2), Rational(3, 2), 18) == Surd::make(Rational(1, 2), Rational(9, 2), 2));
    CHECK(Surd::make(3, 0, 41) == Surd(3));
    CHECK(Surd::make(2, 5, 0) == Surd(2));
    CHECK(Surd::make(0, 1, 1) == Surd(1));
    CHECK_THROWS_AS(Surd::make(0, 1, -3), std::domain_error);
}

TEST_CASE("surd arithmetic and numeric value") {
    const Surd s = Surd::make(1, 1, 2);  // 1 + sqrt(2)
    CHECK(s.value() == Catch::Approx(1 + std::sqrt(2.0)).epsilon(1e-14));
    CHECK((s + Surd::make(2, -1, 2)) == Surd(3));
    CHECK((s - s) == Surd(0));
    CHECK((Rational(3) * s) == Surd::make(3, 3, 2));
    CHECK_THROWS_AS(Surd::make(0, 1, 2) + Surd::make(0, 1, 3), std::logic_error);
    // rational + surd keeps the radicand
    CHECK((Surd(2) + Surd::make(0, 1, 3)) == Surd::make(2, 1, 3));
}

TEST_CASE("exact sign of a + b*sqrt(d)") {
    CHECK(Surd::make(3, -1, 8).sign() == 1);    // 3 > 2*sqrt(2)
    CHECK(Surd::make(3, -1, 10).sign() == -1);  // 3 < sqrt(10)
    CHECK(Surd::make(-3, 1, 10).sign() == 1);
    CHECK(Surd::make(-4, 1, 10).sign() == -1);
    CHECK(Surd::make(3, -1, 9).sign() == 0);  // 3 - 3
    CHECK(Surd(0).sign() == 0);
    CHECK(Surd(Rational(-1, 7)).sign() == -1);
    CHECK(abs(Surd::make(1, -1, 2)) == Surd::make(-1, 1, 2));
}

TEST_CASE("integrality and rationality flags") {
    CHECK(Surd(4).is_integer());
    CHECK_FALSE(Surd(Rational(1, 2)).is_integer());
    CHECK(Surd(Rational(1, 2)).is_rational());
    CHECK_FALSE(Surd::make(0, 1, 5).is_rational());
    CHECK(Surd::make(0, 2, 9).is_integer());  // collapses to 6
}

TEST_CASE("printable forms") {
    CHECK(Surd(Rational(10, 3)).str() == "10/3");
    CHECK(Surd::make(1, 1, 41).str() == "1 + sqrt(41)");
    CHECK(Surd::make(0, -1, 2).str() == "-sqrt(2)");
    CHECK(Surd::make(Rational(1, 2), Rational(-1, 2), 17).str() == "1/2 - 1/2*sqrt(17)");
}
