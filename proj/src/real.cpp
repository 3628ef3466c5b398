#include "qsw/real.hpp"

#include <cmath>

namespace qsw {

namespace {
mpfr_prec_t bits_for(long digits) {
    if (digits < 1) throw DomainError("precision must be >= 1 digit");
    // log2(10) ~ 3.3220, plus guard bits
    return static_cast<mpfr_prec_t>(digits * 3.3220) + 16;
}
} // namespace

Real::Real(long digits) : digits_(digits) {
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(long value, long digits) {
    Real r(digits);
    mpfr_set_si(r.v_, value, MPFR_RNDN);
    return r;
}

Real Real::of(const Rational& value, long digits) {
    Real r(digits);
    mpfr_set_q(r.v_, value.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::parse(const std::string& text, long digits) {
    Real r(digits);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("invalid numeric literal: '" + text + "'", 0);
    return r;
}

Real Real::pi(long digits) {
    Real r(digits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

bool Real::is_negative() const { return mpfr_sgn(v_) < 0; }
bool Real::is_zero() const { return mpfr_zero_p(v_); }
int Real::cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }

namespace {
long max_digits(const Real& a, const Real& b) {
    return a.digits() > b.digits() ? a.digits() : b.digits();
}
} // namespace

#define QSW_REAL_BINOP(name, fn)                                              \
    Real Real::operator name(const Real& o) const {                           \
        Real r(max_digits(*this, o));                                         \
        fn(r.raw(), v_, o.v_, MPFR_RNDN);                                     \
        return r;                                                             \
    }

QSW_REAL_BINOP(+, mpfr_add)
QSW_REAL_BINOP(-, mpfr_sub)
QSW_REAL_BINOP(*, mpfr_mul)
QSW_REAL_BINOP(/, mpfr_div)
#undef QSW_REAL_BINOP

Real Real::operator-() const {
    Real r(digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define QSW_REAL_UNFN(name, fn)                                               \
    Real Real::name() const {                                                 \
        Real r(digits_);                                                      \
        fn(r.raw(), v_, MPFR_RNDN);                                           \
        return r;                                                             \
    }

QSW_REAL_UNFN(abs, mpfr_abs)
QSW_REAL_UNFN(sqrt, mpfr_sqrt)
QSW_REAL_UNFN(exp, mpfr_exp)
QSW_REAL_UNFN(expm1, mpfr_expm1)
QSW_REAL_UNFN(log, mpfr_log)
QSW_REAL_UNFN(log1p, mpfr_log1p)
QSW_REAL_UNFN(sin, mpfr_sin)
#undef QSW_REAL_UNFN

Real Real::lngamma() const {
    if (mpfr_sgn(v_) <= 0)
        throw DomainError("lngamma needs a positive argument");
    Real r(digits_);
    mpfr_lngamma(r.raw(), v_, MPFR_RNDN);
    return r;
}

Real Real::pow_int(long e) const {
    Real r(digits_);
    mpfr_pow_si(r.raw(), v_, e, MPFR_RNDN);
    return r;
}

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Real::str(long digits) const {
    if (digits < 0) digits = digits_;
    mpfr_exp_t exp10 = 0;
    char* s = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits),
                           v_, MPFR_RNDN);
    if (!s) return "nan";
    std::string mantissa(s);
    mpfr_free_str(s);
    if (mantissa == "0" || mantissa == "-0") return "0";
    bool neg = !mantissa.empty() && mantissa[0] == '-';
    std::string body = neg ? mantissa.substr(1) : mantissa;
    std::string out = (neg ? "-" : "");
    out += body.substr(0, 1) + "." + body.substr(1) + "e" +
           std::to_string(exp10 - 1);
    return out;
}

} // namespace qsw
