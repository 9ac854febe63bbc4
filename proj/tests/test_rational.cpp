#include <catch2/catch_amalgamated.hpp>

#include "crsphere/rational.hpp"

using namespace crsphere;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));  // reduced
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(to_string(parse_rational("4/8")) == "1/2");

    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
}

TEST_CASE("gaussian rational arithmetic") {
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK((GaussianRational(Rational(1, 2), Rational(1, 3)) +
           GaussianRational(Rational(1, 2), Rational(-1, 3))) == GaussianRational(1));

    const GaussianRational x{Rational(2, 3), Rational(-1, 5)};
    CHECK(x / x == GaussianRational(1));
    CHECK(x * x.conj() == GaussianRational(x.norm_square()));
    CHECK_THROWS_AS(x / GaussianRational(0), std::domain_error);
}

TEST_CASE("gaussian rational field laws on samples") {
    // small deterministic sample of nonzero elements
    std::vector<GaussianRational> xs;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            Rational re(a, 3), im(b, 2);
            re.canonicalize();
            im.canonicalize();
            xs.emplace_back(re, im);
        }

    for (const auto& x : xs)
        for (const auto& y : xs) {
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            for (const auto& z : xs) {
                CHECK((x + y) + z == x + (y + z));
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * (y + z) == x * y + x * z);
            }
        }

    for (const auto& x : xs) {
        CHECK(x.conj().conj() == x);
        if (!x.is_zero()) CHECK(x * (GaussianRational(1) / x) == GaussianRational(1));
    }
}

TEST_CASE("gaussian rational text round trip") {
    for (const auto& s : {"1/2", "-1/2", "1/2+1/3i", "1/2-1/3i", "-2/3i", "0", "5"}) {
        // parse via the polynomial coefficient grammar is exercised elsewhere;
        // here: printing is stable
        (void)s;
    }
    CHECK(to_string(GaussianRational(Rational(1, 2), Rational(1, 3))) == "1/2+1/3i");
    CHECK(to_string(GaussianRational(Rational(0), Rational(-2, 3))) == "-2/3i");
    CHECK(to_string(GaussianRational(Rational(-1, 2), Rational(0))) == "-1/2");
}
