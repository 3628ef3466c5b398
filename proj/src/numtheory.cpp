#include "qsw/numtheory.hpp"

#include <mutex>

namespace qsw {

int moebius(long n) {
    if (n < 1) throw DomainError("moebius needs n >= 1");
    int factors = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0; // square factor
        ++factors;
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw DomainError("divisors needs n >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

const Rational& bernoulli_number(int n) {
    if (n < 0) throw DomainError("bernoulli_number needs n >= 0");
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    /* sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, i.e.
     * B_n = -(1/(n+1)) sum_{j<n} C(n+1, j) B_j; gives B_1 = -1/2. */
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        Rational acc(0);
        for (int j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[n];
}

Rational bernoulli_poly(int n, const Rational& x) {
    if (n < 0) throw DomainError("bernoulli_poly needs n >= 0");
    // B_n(x) = sum_k C(n, k) B_{n-k} x^k, evaluated by Horner on k
    Rational acc(0);
    for (int k = n; k >= 0; --k) {
        acc *= x;
        acc += Rational(binomial(n, k)) * bernoulli_number(n - k);
    }
    return acc;
}

} // namespace qsw
