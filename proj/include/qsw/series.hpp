#pragma once

#include "qsw/eisenstein.hpp"
#include "qsw/exact.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qsw {

enum class Ring { Integer, Rational, Eisenstein };

std::string ring_name(Ring r);
Ring ring_from_name(const std::string& name); // "int" | "rat" | "eis"

/* Unify two coefficient rings: Z embeds in both Q and Z[w]; Q and Z[w]
 * never mix. */
Ring unify_rings(Ring a, Ring b);

/* A truncated formal power series c_0 + c_1 q + ... + c_N q^N over one of
 * the three coefficient rings.  N is the guaranteed-exact order; exactly
 * N+1 coefficients are stored and comparisons beyond N are errors, never
 * silent zero-padding.  All operations return fresh values; the in-place
 * (1 - zeta q^m) helpers below are the only mutators and are the building
 * blocks for Pochhammer products. */
class Series {
  public:
    Series(Ring ring, long order); // zero series

    static Series one(Ring ring, long order);
    static Series monomial(Ring ring, long order, long degree); // q^degree

    Ring ring() const { return ring_; }
    long order() const { return order_; }

    // typed coefficient access; degree must be <= order
    const BigInt& at_int(long n) const;
    const Rational& at_rat(long n) const;
    const ::qsw::Eisenstein& at_eis(long n) const;
    std::string coeff_str(long n) const;
    bool coeff_is_zero(long n) const;

    // typed coefficient mutation (used by builders)
    void set(long n, BigInt v);
    void set(long n, Rational v);
    void set(long n, ::qsw::Eisenstein v);

    Series convert(Ring target) const; // embedding only; throws RingMixError
    Series truncate(long new_order) const;

    std::vector<BigInt>& ints();
    std::vector<Rational>& rats();
    std::vector<::qsw::Eisenstein>& eiss();
    const std::vector<BigInt>& ints() const;
    const std::vector<Rational>& rats() const;
    const std::vector<::qsw::Eisenstein>& eiss() const;

  private:
    Ring ring_;
    long order_;
    std::variant<std::vector<BigInt>, std::vector<Rational>,
                 std::vector<::qsw::Eisenstein>>
        coeffs_;
};

Series series_add(const Series& f, const Series& g);
Series series_sub(const Series& f, const Series& g);
Series series_neg(const Series& f);

// Cauchy product truncated to min(order f, order g)
Series series_mul(const Series& f, const Series& g);

// requires unit constant term (+-1 over Z, nonzero over Q, unit of Z[w])
Series series_inverse(const Series& f);

Series series_div(const Series& f, const Series& g);

// integer exponent; negative exponents invert first
Series series_pow(const Series& f, long e);

// -q F'(q)/F(q) to order F; requires constant term exactly 1
Series q_logderiv(const Series& f);

/* q -> zeta q^k: coefficient of q^{jk} becomes zeta^j c_j, result order
 * (order+1)k - 1.  A complex zeta forces the Eisenstein ring; applying it
 * to a Rational-ring series is a ring-mix error. */
Series series_substitute(const Series& f, RootOfUnity zeta, long k);

struct EqualityResult {
    bool equal = true;
    long degree = -1;      // smallest mismatching degree when !equal
    std::string lhs, rhs;  // the two offending coefficients
};

// exact comparison through degree up_to after ring unification
EqualityResult series_equal(const Series& f, const Series& g, long up_to);

/* In-place multiply/divide by (1 - zeta q^m), m >= 1.  One O(N) pass each;
 * every Pochhammer factor reduces to a chain of these. */
void mul_one_minus(Series& f, long m, RootOfUnity zeta);
void div_one_minus(Series& f, long m, RootOfUnity zeta);

// acc += zeta * q^shift * t  (coefficients beyond acc's order are dropped)
void add_scaled_shift(Series& acc, const Series& t, long shift,
                      RootOfUnity zeta);

// plain-text dump, one "n: value" line per coefficient
std::string series_dump(const Series& f);
Series series_parse(const std::string& text, Ring ring);

} // namespace qsw
