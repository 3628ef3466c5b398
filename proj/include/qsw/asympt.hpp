#pragma once

#include "qsw/exact.hpp"
#include "qsw/real.hpp"

#include <optional>
#include <vector>

namespace qsw {

/* The x -> 0 expansion of -ln prod_{m>=0} (1 - e^{-(m+a)x}):
 *
 *   pi^2/(6x) + (a - 1/2) ln x + ln(Gamma(a)/sqrt(2 pi))
 *     - sum_{n>=1} (-1)^n B_n / (n (n+1)!) * B_{n+1}(a) x^n
 *
 * with the B_1 = -1/2 convention (see the poly coefficient lock in the
 * tests: the pair sum of the x^1 coefficients must equal -B_2(a)/2).
 * The symmetric pair a, 1-a adds the two expansions; all its x^n
 * coefficients with n >= 2 cancel exactly because B_{n+1}(1-a) =
 * -B_{n+1}(a) for even n+1 > 1... the cancellation is computed, never
 * assumed.  The pair constant is ln(1/(2 sin pi a)), the value of
 * ln(Gamma(a)Gamma(1-a)/(2 pi)) under the reflection formula. */
enum class ConstKind { GammaSingle, PairReflection };

struct AsymptoticExpansion {
    Rational a;
    Rational invx_pi2;          // coefficient of pi^2/x   (1/6 or 1/3)
    Rational log_coef;          // coefficient of ln x     (a - 1/2 or 0)
    ConstKind const_kind = ConstKind::GammaSingle;
    std::vector<Rational> poly; // poly[i] multiplies x^{i+1}
};

AsymptoticExpansion expansion_single(const Rational& a, int order);
AsymptoticExpansion expansion_pair(const Rational& a, int order);

// exact constant-term descriptor evaluated numerically
Real eval_const(const AsymptoticExpansion& e, long digits);
Real eval_expansion(const AsymptoticExpansion& e, const Real& x, long digits);

/* Direct summation of -sum_{m>=0} ln(1 - e^{-(m+a)x}), terminated once the
 * tail bound e^{-(m+a)x} / (1 - e^{-x}) drops below 10^{-(digits+5)}. */
Real eval_product_direct(const Rational& a, const Real& x, long digits);

// the symmetric pair: direct value for a and 1-a together
Real eval_pair_direct(const Rational& a, const Real& x, long digits);

/* Normalized modular limit for coprime 0 < a < b at q = e^{-2 pi x}:
 *
 *   R = q^{b B_2(a/b)/2} (q^a, q^{b-a}; q^b)_inf
 *       / ( 2 sin(pi a/b) e^{-pi/(6 b x)} )
 *
 * R -> 1 as x -> 0 with exponentially small error. */
Real modular_normalized_check(long a, long b, const Real& x, long digits);

// the modular normalization exponent b B_2(a/b) / 2
Rational normalization_exponent(long a, long b);

/* Smallest even n <= max_order with a nonzero x^n coefficient in
 * expansion_single(a/b); empty when none exists (a/b = 1/2 or 1). */
std::optional<int> asymmetry_witness(long a, long b, int max_order);

} // namespace qsw
