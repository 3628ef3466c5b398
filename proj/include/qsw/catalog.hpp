#pragma once

#include "qsw/series.hpp"

#include <string>
#include <vector>

namespace qsw {

/* One Pochhammer factor (zeta q^s; q^b)_count^e.  count < 0 means the
 * infinite product; only indices with s + j*b <= N ever touch a truncated
 * expansion. */
struct FactorSpec {
    RootOfUnity zeta;
    long s = 1;     // offset, >= 1
    long b = 1;     // base modulus, >= 1
    int e = 1;      // exponent of the whole symbol
    long count = kInf;

    static constexpr long kInf = -1;
};

// expand the product of the given factors to order N
Series build_factors(const std::vector<FactorSpec>& specs, long N);

/* The named q-functions.  Ids:
 *   G, H          modulus-5 pair
 *   A, B, C       modulus-7 triple
 *   K1..K7        modulus-9 family; K4b..K7b are the conjugates
 *   K             1/(q,q^2;q^3)
 *   AG(m,i)       (q^i,q^{m-i},q^m;q^m)_inf / (q;q)_inf
 *   ETA(b)        (q^b;q^b)_inf
 * Every id has a product side; sum sides exist for G,H,A,B,C,K1..K7 and
 * the K4..K7 conjugates (AG(5,i) and AG(7,i) forward to the equal named
 * function's sum). */
bool catalog_has(const std::string& id);
bool catalog_has_sum(const std::string& id);
std::vector<std::string> catalog_ids();

// the factor list behind a product side (used by docs and the CLI)
std::vector<FactorSpec> product_recipe(const std::string& id);

Series product_side(const std::string& id, long N);
Series sum_side(const std::string& id, long N);

// convenience for the Andrews-Gordon family; pre: m >= 5 odd, 1 <= i <= (m-1)/2
Series ag_product(long m, long i, long N);

std::string format_factor(const FactorSpec& f);
std::string describe_recipe(const std::string& id);

} // namespace qsw
