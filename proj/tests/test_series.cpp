#include "doctest.h"

#include "qsw/series.hpp"

#include <random>
#include <vector>

using namespace qsw;

namespace {

// Partition-counting dynamic program: number of partitions of n into parts
// from `parts` (each usable any number of times).  Independent oracle.
std::vector<long> partition_dp(const std::vector<long>& parts, long N) {
    std::vector<long> dp(N + 1, 0);
    dp[0] = 1;
    for (long p : parts)
        for (long n = p; n <= N; ++n) dp[n] += dp[n - p];
    return dp;
}

std::vector<long> sigma1(long N) {
    std::vector<long> s(N + 1, 0);
    for (long d = 1; d <= N; ++d)
        for (long m = d; m <= N; m += d) s[m] += d;
    return s;
}

Series euler_product(long N) { // (q;q)_inf
    Series f = Series::one(Ring::Integer, N);
    for (long k = 1; k <= N; ++k) mul_one_minus(f, k, RootOfUnity::one());
    return f;
}

Series random_series(Ring ring, long N, std::mt19937_64& rng,
                     bool unit_constant) {
    Series f(ring, N);
    std::uniform_int_distribution<long> d(-3, 3);
    for (long n = 0; n <= N; ++n) {
        switch (ring) {
        case Ring::Integer: f.set(n, BigInt(d(rng))); break;
        case Ring::Rational: {
            long den = std::uniform_int_distribution<long>(1, 4)(rng);
            f.set(n, make_rational(d(rng), den));
            break;
        }
        case Ring::Eisenstein:
            f.set(n, Eisenstein(BigInt(d(rng)), BigInt(d(rng))));
            break;
        }
    }
    if (unit_constant) {
        switch (ring) {
        case Ring::Integer: f.set(0, BigInt(1)); break;
        case Ring::Rational: f.set(0, make_rational(2, 3)); break;
        case Ring::Eisenstein: f.set(0, Eisenstein(BigInt(1), BigInt(0))); break;
        }
    }
    return f;
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("construction and coefficient access") {
    Series f(Ring::Integer, 5);
    for (long n = 0; n <= 5; ++n) CHECK(f.coeff_is_zero(n));
    f.set(2, BigInt(-7));
    CHECK(f.at_int(2) == -7);
    CHECK(f.coeff_str(2) == "-7");
    CHECK_THROWS_AS(f.at_int(6), OrderError);
    CHECK_THROWS_AS((void)Series(Ring::Integer, -1), OrderError);
    Series m = Series::monomial(Ring::Integer, 4, 3);
    CHECK(m.coeff_is_zero(0));
    CHECK(m.at_int(3) == 1);
    CHECK(m.order() == 4);
    CHECK_THROWS_AS(Series::monomial(Ring::Integer, 3, 4), OrderError);
}

TEST_CASE("ring unification and mix error") {
    CHECK(unify_rings(Ring::Integer, Ring::Rational) == Ring::Rational);
    CHECK(unify_rings(Ring::Integer, Ring::Eisenstein) == Ring::Eisenstein);
    CHECK(unify_rings(Ring::Integer, Ring::Integer) == Ring::Integer);
    CHECK_THROWS_AS(unify_rings(Ring::Rational, Ring::Eisenstein),
                    RingMixError);
    Series f(Ring::Rational, 4), g(Ring::Eisenstein, 4);
    f.set(0, Rational(1));
    g.set(0, Eisenstein(BigInt(1), BigInt(0)));
    CHECK_THROWS_AS(series_mul(f, g), RingMixError);
    CHECK_THROWS_AS(series_add(f, g), RingMixError);
}

TEST_CASE("geometric inverse and identity") {
    Series one_minus_q(Ring::Integer, 5);
    one_minus_q.set(0, BigInt(1));
    one_minus_q.set(1, BigInt(-1));
    Series inv = series_inverse(one_minus_q);
    for (long n = 0; n <= 5; ++n) CHECK(inv.at_int(n) == 1);
    Series prod = series_mul(one_minus_q, inv);
    CHECK(prod.at_int(0) == 1);
    for (long n = 1; n <= 5; ++n) CHECK(prod.at_int(n) == 0);
    std::mt19937_64 rng(1);
    Series f = random_series(Ring::Integer, 9, rng, false);
    Series one = Series::one(Ring::Integer, 9);
    CHECK(series_equal(series_mul(f, one), f, 9).equal);
}

TEST_CASE("inverse requires a unit constant term") {
    Series f(Ring::Integer, 3);
    f.set(0, BigInt(2));
    CHECK_THROWS_AS(series_inverse(f), UnitError);
    Series g(Ring::Rational, 3);
    CHECK_THROWS_AS(series_inverse(g), UnitError); // zero constant
    Series h(Ring::Eisenstein, 3);
    h.set(0, Eisenstein(BigInt(1), BigInt(2)));
    CHECK_THROWS_AS(series_inverse(h), UnitError);
    Series k(Ring::Eisenstein, 3);
    k.set(0, Eisenstein(BigInt(0), BigInt(1))); // omega is a unit
    CHECK_NOTHROW(series_inverse(k));
}

TEST_CASE("partition generating function from the Euler product") {
    Series f = series_inverse(euler_product(10));
    std::vector<long> expected = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 0; n <= 10; ++n)
        CHECK(f.at_int(n) == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("ternary relation at the series level") {
    Series f = Series::one(Ring::Eisenstein, 6);
    mul_one_minus(f, 1, RootOfUnity::one());
    mul_one_minus(f, 1, RootOfUnity::omega());
    mul_one_minus(f, 1, RootOfUnity::omega_bar());
    // (1-q)(1-wq)(1-wbq) = 1-q^3
    CHECK(f.coeff_str(0) == "1");
    CHECK(f.coeff_is_zero(1));
    CHECK(f.coeff_is_zero(2));
    CHECK(f.coeff_str(3) == "-1");
    for (long n = 4; n <= 6; ++n) CHECK(f.coeff_is_zero(n));
}

TEST_CASE("mul_one_minus and div_one_minus are inverse passes") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        Series f = random_series(Ring::Eisenstein, 24, rng, false);
        Series g = f;
        for (int j = 0; j < 6; ++j) {
            long m = 1 + (trial + j) % 7;
            RootOfUnity z = RootOfUnity::from_exponent(j);
            mul_one_minus(g, m, z);
            div_one_minus(g, m, z);
        }
        CHECK(series_equal(f, g, 24).equal);
    }
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(4242);
    for (Ring ring : {Ring::Integer, Ring::Rational, Ring::Eisenstein}) {
        for (int trial = 0; trial < 12; ++trial) {
            long N = 16 + (trial % 4) * 16; // up to 64
            Series f = random_series(ring, N, rng, false);
            Series g = random_series(ring, N, rng, false);
            Series h = random_series(ring, N, rng, false);
            CHECK(series_equal(series_add(f, g), series_add(g, f), N).equal);
            CHECK(series_equal(series_mul(f, g), series_mul(g, f), N).equal);
            CHECK(series_equal(series_mul(series_mul(f, g), h),
                               series_mul(f, series_mul(g, h)), N)
                      .equal);
            CHECK(series_equal(series_mul(f, series_add(g, h)),
                               series_add(series_mul(f, g), series_mul(f, h)),
                               N)
                      .equal);
            CHECK(series_equal(series_sub(f, f), Series(ring, N), N).equal);
        }
    }
}

TEST_CASE("inverse of inverse is the identity map") {
    std::mt19937_64 rng(555);
    for (Ring ring : {Ring::Integer, Ring::Rational, Ring::Eisenstein}) {
        for (int trial = 0; trial < 8; ++trial) {
            Series f = random_series(ring, 32, rng, true);
            CHECK(series_equal(series_inverse(series_inverse(f)), f, 32).equal);
        }
    }
}

TEST_CASE("q log derivative basics") {
    Series f(Ring::Integer, 8);
    f.set(0, BigInt(1));
    f.set(1, BigInt(-1)); // 1 - q
    Series c = q_logderiv(f);
    CHECK(c.coeff_is_zero(0));
    for (long n = 1; n <= 8; ++n) CHECK(c.at_int(n) == 1);
    Series one = Series::one(Ring::Integer, 8);
    Series z = q_logderiv(one);
    for (long n = 0; n <= 8; ++n) CHECK(z.coeff_is_zero(n));
    Series bad(Ring::Integer, 3);
    bad.set(0, BigInt(2));
    CHECK_THROWS_AS(q_logderiv(bad), UnitError);
}

TEST_CASE("q log derivative of the Euler product is the divisor sum") {
    long N = 40;
    Series c = q_logderiv(euler_product(N));
    auto s = sigma1(N);
    for (long n = 1; n <= N; ++n)
        CHECK(c.at_int(n) == s[static_cast<std::size_t>(n)]);
}

TEST_CASE("q log derivative is additive over products") {
    std::mt19937_64 rng(909);
    for (Ring ring : {Ring::Integer, Ring::Rational, Ring::Eisenstein}) {
        for (int trial = 0; trial < 8; ++trial) {
            Series f = random_series(ring, 24, rng, true);
            Series g = random_series(ring, 24, rng, true);
            if (ring == Ring::Rational) {
                f.set(0, Rational(1));
                g.set(0, Rational(1));
            }
            Series lhs = q_logderiv(series_mul(f, g));
            Series rhs = series_add(q_logderiv(f), q_logderiv(g));
            CHECK(series_equal(lhs, rhs, 24).equal);
        }
    }
}

TEST_CASE("substitution: pentagonal expansion under q -> q^16") {
    Series e = euler_product(2); // 1 - q - q^2 to order 2
    Series s = series_substitute(e, RootOfUnity::one(), 16);
    CHECK(s.order() == 47);
    CHECK(s.at_int(0) == 1);
    CHECK(s.at_int(16) == -1);
    CHECK(s.at_int(32) == -1);
    long nonzero = 0;
    for (long n = 0; n <= 47; ++n)
        if (!s.coeff_is_zero(n)) ++nonzero;
    CHECK(nonzero == 3);
}

TEST_CASE("pentagonal numbers in the Euler product") {
    Series e = euler_product(7);
    std::vector<long> expected = {1, -1, -1, 0, 0, 1, 0, 1};
    for (long n = 0; n <= 7; ++n)
        CHECK(e.at_int(n) == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("substitution composition rule c_j -> zeta^{jk} c_j") {
    std::mt19937_64 rng(31337);
    for (int j = 0; j < 6; ++j) {
        RootOfUnity z = RootOfUnity::from_exponent(j);
        Series f = random_series(Ring::Eisenstein, 12, rng, false);
        long k = 3;
        Series a = series_substitute(series_substitute(f, RootOfUnity::one(), k),
                                     z, 1);
        Series b(Ring::Eisenstein, a.order());
        for (long n = 0; n <= 12; ++n) {
            Eisenstein c = f.at_eis(n);
            Eisenstein scaled = c * z.pow(n * k).value();
            if (n * k <= b.order()) b.set(n * k, scaled);
        }
        CHECK(series_equal(a, b, a.order()).equal);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(2718);
    Series f = random_series(Ring::Integer, 10, rng, false);
    Series g = random_series(Ring::Integer, 10, rng, false);
    RootOfUnity z = RootOfUnity::minus_one();
    long k = 4;
    Series lhs = series_substitute(series_mul(f, g), z, k);
    Series rhs = series_mul(series_substitute(f, z, k),
                            series_substitute(g, z, k));
    CHECK(series_equal(lhs, rhs, lhs.order()).equal);
    CHECK(series_equal(series_substitute(f, RootOfUnity::one(), 1), f, 10)
              .equal);
}

TEST_CASE("substitution with a complex root leaves the rational ring out") {
    Series f(Ring::Rational, 4);
    f.set(0, Rational(1));
    CHECK_THROWS_AS(series_substitute(f, RootOfUnity::omega(), 2),
                    RingMixError);
    Series g(Ring::Integer, 4);
    g.set(0, BigInt(1));
    g.set(1, BigInt(5));
    Series s = series_substitute(g, RootOfUnity::omega(), 1);
    CHECK(s.ring() == Ring::Eisenstein);
    CHECK(s.coeff_str(1) == "5*w");
}

TEST_CASE("series equality reporting") {
    Series f(Ring::Integer, 100), g(Ring::Integer, 100);
    f.set(0, BigInt(1));
    f.set(1, BigInt(-1));
    g.set(0, BigInt(1));
    g.set(1, BigInt(-1));
    g.set(99, BigInt(1));
    CHECK(series_equal(f, g, 98).equal);
    EqualityResult r = series_equal(f, g, 99);
    CHECK(!r.equal);
    CHECK(r.degree == 99);
    CHECK(r.lhs == "0");
    CHECK(r.rhs == "1");
    CHECK_THROWS_AS(series_equal(f, g, 101), OrderError);
}

TEST_CASE("truncation and convert") {
    Series f(Ring::Integer, 6);
    f.set(5, BigInt(3));
    Series t = f.truncate(4);
    CHECK(t.order() == 4);
    CHECK_THROWS_AS(f.truncate(7), OrderError);
    Series r = f.convert(Ring::Rational);
    CHECK(r.at_rat(5) == Rational(3));
    Series e = f.convert(Ring::Eisenstein);
    CHECK(e.at_eis(5).real_part() == 3);
    CHECK_THROWS_AS(r.convert(Ring::Eisenstein), RingMixError);
    CHECK_THROWS_AS(r.convert(Ring::Integer), RingMixError);
}

TEST_CASE("series pow including negative exponents") {
    Series f(Ring::Integer, 8);
    f.set(0, BigInt(1));
    f.set(1, BigInt(-1));
    Series sq = series_pow(f, 2);
    CHECK(sq.at_int(0) == 1);
    CHECK(sq.at_int(1) == -2);
    CHECK(sq.at_int(2) == 1);
    Series inv2 = series_pow(f, -2);
    for (long n = 0; n <= 8; ++n) CHECK(inv2.at_int(n) == n + 1);
    Series p0 = series_pow(f, 0);
    CHECK(series_equal(p0, Series::one(Ring::Integer, 8), 8).equal);
}

TEST_CASE("dump and parse round-trip") {
    std::mt19937_64 rng(11);
    for (Ring ring : {Ring::Integer, Ring::Rational, Ring::Eisenstein}) {
        Series f = random_series(ring, 12, rng, false);
        std::string text = series_dump(f);
        Series g = series_parse(text, ring);
        CHECK(g.order() >= 12);
        CHECK(series_equal(f, g, 12).equal);
    }
    CHECK_THROWS_AS(series_parse("0: 1\n0: 2\n", Ring::Integer), ParseError);
    CHECK_THROWS_AS(series_parse("abc\n", Ring::Integer), ParseError);
    Series with_comment = series_parse("# header\n0: 1\n3: -2\n", Ring::Integer);
    CHECK(with_comment.at_int(3) == -2);
}

} // TEST_SUITE
