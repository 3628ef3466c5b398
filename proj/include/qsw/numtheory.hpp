#pragma once

#include "qsw/exact.hpp"

#include <vector>

namespace qsw {

// Moebius function via trial-division factorization; mu(1) = 1.
int moebius(long n);

// Divisors of n in increasing order.
std::vector<long> divisors(long n);

BigInt binomial(long n, long k);

/* Bernoulli numbers with the B_1 = -1/2 convention, computed once by the
 * defining recurrence sum_{j<=n} C(n+1, j) B_j = [n = 0] and cached. */
const Rational& bernoulli_number(int n);

/* Bernoulli polynomial B_n(x) = sum_k C(n, k) B_{n-k} x^k evaluated at a
 * rational point. */
Rational bernoulli_poly(int n, const Rational& x);

} // namespace qsw
