#include <catch2/catch_amalgamated.hpp>

#include "crsphere/linalg.hpp"
#include "crsphere/verify.hpp"

using namespace crsphere;

namespace {

GMatrix random_matrix(size_t n, std::uint64_t seed) {
    detail::SampleRng rng{seed};
    GMatrix m(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            Rational re(rng.range(-6, 6), rng.range(1, 4));
            Rational im(rng.range(-6, 6), rng.range(1, 4));
            re.canonicalize();
            im.canonicalize();
            m.at(r, c) = GaussianRational(re, im);
        }
    return m;
}

GMatrix random_hpd(size_t n, std::uint64_t seed) {
    // B^H B + n I is Hermitian positive definite
    const GMatrix b = random_matrix(n, seed);
    const GMatrix bh = b.conj_transpose();
    GMatrix g(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            GaussianRational s;
            for (size_t k = 0; k < n; ++k) s += bh.at(r, k) * b.at(k, c);
            g.at(r, c) = s;
        }
    for (size_t r = 0; r < n; ++r) g.at(r, r) += GaussianRational(Rational(static_cast<long>(n)));
    return g;
}

}  // namespace

TEST_CASE("rref, rank and null space") {
    GMatrix m(2, 3);
    m.at(0, 0) = GaussianRational(1);
    m.at(0, 1) = GaussianRational(2);
    m.at(0, 2) = GaussianRational(3);
    m.at(1, 0) = GaussianRational(2);
    m.at(1, 1) = GaussianRational(4);
    m.at(1, 2) = GaussianRational(6);
    CHECK(rank(m) == 1);
    const auto ns = null_space(m);
    REQUIRE(ns.size() == 2);
    // null vectors actually annihilate the rows
    for (const auto& v : ns) {
        for (size_t r = 0; r < 2; ++r) {
            GaussianRational s;
            for (size_t c = 0; c < 3; ++c) s += m.at(r, c) * v[c];
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("solve") {
    GMatrix a(2, 2);
    a.at(0, 0) = GaussianRational(2);
    a.at(0, 1) = GaussianRational::i();
    a.at(1, 0) = -GaussianRational::i();
    a.at(1, 1) = GaussianRational(3);
    const std::vector<GaussianRational> b{GaussianRational(1), GaussianRational(0)};
    const auto x = solve(a, b);
    REQUIRE(x.has_value());
    GaussianRational r0 = a.at(0, 0) * (*x)[0] + a.at(0, 1) * (*x)[1];
    GaussianRational r1 = a.at(1, 0) * (*x)[0] + a.at(1, 1) * (*x)[1];
    CHECK(r0 == b[0]);
    CHECK(r1 == b[1]);

    // inconsistent system
    GMatrix bad(2, 1);
    bad.at(0, 0) = GaussianRational(1);
    bad.at(1, 0) = GaussianRational(1);
    CHECK_FALSE(solve(bad, {GaussianRational(1), GaussianRational(2)}).has_value());
}

TEST_CASE("determinants: Bareiss agrees with field elimination") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
        for (size_t n : {1u, 2u, 3u, 5u}) {
            const GMatrix m = random_matrix(n, seed * 10 + n);
            CHECK(det_bareiss(m) == det_field(m));
        }
    }

    GMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = GaussianRational(1);
    CHECK(det_bareiss(id) == GaussianRational(1));

    GMatrix singular(2, 2);
    singular.at(0, 0) = GaussianRational(1);
    singular.at(0, 1) = GaussianRational(2);
    singular.at(1, 0) = GaussianRational(2);
    singular.at(1, 1) = GaussianRational(4);
    CHECK(det_bareiss(singular) == GaussianRational(0));
}

TEST_CASE("ldlt and congruence") {
    const GMatrix g = random_hpd(4, 17);
    const LdlResult ldl = ldlt(g);
    for (const auto& d : ldl.d) CHECK(d > 0);

    // reconstruct L D L^H == G
    GMatrix rec(4, 4);
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c) {
            GaussianRational s;
            for (size_t k = 0; k < 4; ++k)
                s += ldl.l.at(r, k) * GaussianRational(ldl.d[k]) * ldl.l.at(c, k).conj();
            rec.at(r, c) = s;
        }
    CHECK(rec == g);

    // congruence: L^{-1} A L^{-H} recomposes to A
    GMatrix a = random_matrix(4, 99);
    // hermitize
    for (size_t r = 0; r < 4; ++r) {
        a.at(r, r) = GaussianRational(a.at(r, r).re);
        for (size_t c = r + 1; c < 4; ++c) a.at(c, r) = a.at(r, c).conj();
    }
    const GMatrix m = congruence_by_unit_lower_inverse(ldl.l, a);
    GMatrix back(4, 4);
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c) {
            GaussianRational s;
            for (size_t i = 0; i <= r; ++i)
                for (size_t j = 0; j <= c; ++j)
                    s += ldl.l.at(r, i) * m.at(i, j) * ldl.l.at(c, j).conj();
            back.at(r, c) = s;
        }
    CHECK(back == a);

    // non-PD rejection
    GMatrix npd(2, 2);
    npd.at(0, 0) = GaussianRational(-1);
    npd.at(1, 1) = GaussianRational(1);
    CHECK_THROWS_AS(ldlt(npd), std::domain_error);
}
