#include "qsw/asympt.hpp"

#include "qsw/numtheory.hpp"

#include <numeric>

namespace qsw {

namespace {

void check_range(const Rational& a, bool allow_one) {
    if (sgn(a) <= 0 || a > 1 || (!allow_one && a == 1))
        throw DomainError("parameter a out of range: " + to_string(a));
}

BigInt factorial(long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// coefficient of x^n: -(-1)^n B_n / (n (n+1)!) * B_{n+1}(a)
Rational poly_coef(int n, const Rational& a) {
    Rational c = bernoulli_number(n) / Rational(BigInt(n) * factorial(n + 1));
    if (n % 2 == 0) c = -c;
    return c * bernoulli_poly(n + 1, a);
}

} // namespace

AsymptoticExpansion expansion_single(const Rational& a, int order) {
    check_range(a, true);
    if (order < 0) throw DomainError("expansion order must be >= 0");
    AsymptoticExpansion e;
    e.a = a;
    e.invx_pi2 = make_rational(1, 6);
    e.log_coef = a - make_rational(1, 2);
    e.const_kind = ConstKind::GammaSingle;
    e.poly.reserve(order);
    for (int n = 1; n <= order; ++n) e.poly.push_back(poly_coef(n, a));
    return e;
}

AsymptoticExpansion expansion_pair(const Rational& a, int order) {
    check_range(a, false);
    AsymptoticExpansion ea = expansion_single(a, order);
    AsymptoticExpansion eb = expansion_single(Rational(1) - a, order);
    AsymptoticExpansion e;
    e.a = a;
    e.invx_pi2 = ea.invx_pi2 + eb.invx_pi2; // 1/3
    e.log_coef = ea.log_coef + eb.log_coef; // 0
    e.const_kind = ConstKind::PairReflection;
    e.poly.resize(ea.poly.size());
    for (std::size_t i = 0; i < e.poly.size(); ++i)
        e.poly[i] = ea.poly[i] + eb.poly[i];
    return e;
}

Real eval_const(const AsymptoticExpansion& e, long digits) {
    long work = digits + 10;
    if (e.const_kind == ConstKind::GammaSingle) {
        // ln Gamma(a) - ln sqrt(2 pi)
        Real ga = Real::of(e.a, work).lngamma();
        Real two_pi = Real::pi(work) * Real::of(2, work);
        return ga - two_pi.log() / Real::of(2, work);
    }
    // pair: ln Gamma(a) + ln Gamma(1-a) - ln(2 pi) = -ln(2 sin pi a)
    Real pia = Real::pi(work) * Real::of(e.a, work);
    Real denom = Real::of(2, work) * pia.sin();
    return -denom.log();
}

Real eval_expansion(const AsymptoticExpansion& e, const Real& x, long digits) {
    long work = digits + 10;
    Real pi = Real::pi(work);
    Real acc = Real::of(e.invx_pi2, work) * pi * pi / x;
    acc = acc + Real::of(e.log_coef, work) * x.log();
    acc = acc + eval_const(e, work);
    Real xn = Real::of(1, work);
    for (std::size_t i = 0; i < e.poly.size(); ++i) {
        xn = xn * x;
        if (sgn(e.poly[i]) == 0) continue;
        acc = acc + Real::of(e.poly[i], work) * xn;
    }
    return acc;
}

Real eval_product_direct(const Rational& a, const Real& x, long digits) {
    check_range(a, true);
    if (!(x > Real::of(0, 8))) throw DomainError("x must be positive");
    long work = digits + 15;
    /* tail after m terms: sum_{j>=m} e^{-(j+a)x} = e^{-(m+a)x}/(1-e^{-x});
     * stop once that dips under 10^{-(digits+5)} */
    Real one = Real::of(1, work);
    Real emx = (-x).exp();                 // e^{-x}
    Real geom = one - emx;                 // 1 - e^{-x}
    Real bound = Real::parse("1e-" + std::to_string(digits + 5), work);
    Real term = (-(Real::of(a, work) * x)).exp(); // e^{-(m+a)x}, m = 0
    Real acc = Real::of(0, work);
    while (term / geom > bound) {
        // -ln(1 - e^{-(m+a)x})
        acc = acc - (-term).log1p();
        term = term * emx;
    }
    return acc;
}

Real eval_pair_direct(const Rational& a, const Real& x, long digits) {
    check_range(a, false);
    return eval_product_direct(a, x, digits) +
           eval_product_direct(Rational(1) - a, x, digits);
}

Rational normalization_exponent(long a, long b) {
    if (a < 1 || b <= a) throw DomainError("need 0 < a < b");
    return Rational(b) * bernoulli_poly(2, make_rational(a, b)) / Rational(2);
}

Real modular_normalized_check(long a, long b, const Real& x, long digits) {
    if (a < 1 || b <= a) throw DomainError("need 0 < a < b");
    if (std::gcd(a, b) != 1) throw DomainError("a and b must be coprime");
    long work = digits + 15;
    Real pi = Real::pi(work);
    Real big_x = Real::of(2 * b, work) * pi * x; // (q^a;q^b) at q=e^{-2 pi x}

    // ln numerator = -2 pi x * bB2(a/b)/2 - [pair product at X]
    Real ln_num = -(Real::of(2, work) * pi * x *
                    Real::of(normalization_exponent(a, b), work));
    ln_num = ln_num - eval_product_direct(make_rational(a, b), big_x, work);
    ln_num = ln_num - eval_product_direct(make_rational(b - a, b), big_x, work);

    // ln denominator = ln(2 sin(pi a/b)) - pi/(6 b x)
    Real ln_den = (Real::of(2, work) * (pi * Real::of(make_rational(a, b), work)).sin()).log();
    ln_den = ln_den - pi / (Real::of(6 * b, work) * x);

    return (ln_num - ln_den).exp();
}

std::optional<int> asymmetry_witness(long a, long b, int max_order) {
    if (a < 1 || b < a) throw DomainError("need 0 < a <= b");
    AsymptoticExpansion e = expansion_single(make_rational(a, b), max_order);
    for (int n = 2; n <= max_order; n += 2)
        if (sgn(e.poly[n - 1]) != 0) return n;
    return std::nullopt;
}

} // namespace qsw
