#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qsw {

// Exact arithmetic lives on GMP. BigInt is an arbitrary-precision signed
// integer; Rational is kept canonical (positive denominator, reduced) by
// the mpq layer as long as values are created through make_rational /
// parse_rational rather than raw mpq_set_str.
using BigInt = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RingMixError : Error {
    using Error::Error;
};
struct OrderError : Error {
    using Error::Error;
};
struct UnitError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct UnknownIdError : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what), position(pos) {}
    std::size_t position;
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

BigInt parse_bigint(const std::string& text);
Rational parse_rational(const std::string& text);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const BigInt& x) { return x == 1; }
inline bool is_one(const Rational& x) { return x == 1; }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

} // namespace qsw
