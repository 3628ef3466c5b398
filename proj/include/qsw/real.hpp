#pragma once

#include "qsw/exact.hpp"

#include <mpfr.h>

#include <string>

namespace qsw {

/* Arbitrary-precision real number (RAII over mpfr_t).  Precision is fixed
 * per value at construction; binary operations compute at the larger of
 * the operand precisions.  `digits` throughout means decimal digits. */
class Real {
  public:
    explicit Real(long digits);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real of(long value, long digits);
    static Real of(const Rational& value, long digits);
    static Real parse(const std::string& text, long digits);
    static Real pi(long digits);

    long digits() const { return digits_; }
    bool is_negative() const;
    bool is_zero() const;
    int cmp(const Real& o) const;
    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator>(const Real& o) const { return cmp(o) > 0; }

    Real operator+(const Real& o) const;
    Real operator-(const Real& o) const;
    Real operator*(const Real& o) const;
    Real operator/(const Real& o) const;
    Real operator-() const;

    Real abs() const;
    Real sqrt() const;
    Real exp() const;
    Real expm1() const;   // e^x - 1
    Real log() const;     // natural log
    Real log1p() const;   // ln(1 + x)
    Real sin() const;
    Real lngamma() const; // requires x > 0
    Real pow_int(long e) const;

    double to_double() const;
    std::string str(long digits = -1) const; // default: full working digits

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    long digits_;
    mpfr_t v_;
};

using NumericValue = Real;

} // namespace qsw
