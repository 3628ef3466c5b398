#pragma once

#include "qsw/series.hpp"

#include <map>
#include <optional>
#include <string>

namespace qsw {

/* Exponent triple of (1-q^k)^{r1} (1-w q^k)^{rw} (1-wb q^k)^{rwb}.  Over
 * the integers rw = rwb = 0.  Triples are only determined modulo the
 * ternary relation (1-q^k)(1-w q^k)(1-wb q^k) = 1-q^{3k}, which shifts
 * (r1,rw,rwb) at k by (t,t,t) and compensates at 3k; equality of forms is
 * therefore decided by `equivalent`, never by literal triple comparison. */
struct ExponentTriple {
    BigInt r1, rw, rwb;
    bool is_zero() const {
        return sgn(r1) == 0 && sgn(rw) == 0 && sgn(rwb) == 0;
    }
};

struct ProductForm {
    long max_order = 0;
    Ring ring = Ring::Integer; // Integer or Eisenstein
    std::map<long, ExponentTriple> entries; // only nonzero triples

    void add(long k, BigInt r1, BigInt rw = 0, BigInt rwb = 0);
};

struct RecognitionFailure {
    long k = 0;
    Rational value; // the offending non-integer exponent
};

struct RecognitionReport {
    ProductForm form;
    bool residual_ok = false;
    std::optional<RecognitionFailure> failure;
};

/* Exponents r_k of F = prod (1-q^k)^{r_k} from the logarithmic derivative:
 * with -qF'/F = sum c_n q^n, Moebius inversion gives
 * r_k = (1/k) sum_{d|k} mu(k/d) c_d.  Each division must be exact; the
 * first non-integer r_k aborts the scan and is reported, because rounding
 * would fabricate a factorization.  On success the form is re-expanded and
 * checked against F through order N. */
RecognitionReport recognize_int(const Series& f, long N);

/* Eisenstein extension by greedy peeling: if the residual is
 * 1 - (A + Bw) q^k + O(q^{k+1}), the admissible triples at k are
 * (A+t, B+t, t); we take t = median{0, -A, -B}, the minimizer of
 * |A+t| + |B+t| + |t|, divide the factors out exactly and continue. */
RecognitionReport recognize_eis(const Series& f, long N);

Series build_product(const ProductForm& p, long N);

// equality modulo the ternary relation = equality of the expansions
bool equivalent(const ProductForm& p1, const ProductForm& p2, long N);

/* Verify recognize_eis(F) against recognize_int(F conj(F)): the norm sends
 * the triple at k to integer exponents 2 r1 - (rw + rwb) at k and rw + rwb
 * at 3k, via (1-w q^k)(1-wb q^k) = (1-q^{3k})/(1-q^k). */
bool norm_crosscheck(const Series& f, long N);

ProductForm norm_image(const ProductForm& p, long N);
ProductForm conj_form(const ProductForm& p);

// serialization: one "k r1 rw rwb" line per nonzero entry
std::string form_dump(const ProductForm& p);
ProductForm form_parse(const std::string& text);

/* Human-oriented printer: groups full residue classes into
 * "(q^s,...;q^b)_inf^e" symbols when the exponent pattern is periodic,
 * falls back to explicit factors otherwise. */
std::string form_pretty(const ProductForm& p);

} // namespace qsw
