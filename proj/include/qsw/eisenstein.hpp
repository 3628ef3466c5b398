#pragma once

#include "qsw/exact.hpp"

namespace qsw {

class Eisenstein;

/* The sixth roots of unity, written multiplicatively as powers of
 * zeta = -conj(w) = 1 + w, where w is a primitive cubic root of unity.
 * Exponents j = 0..5 give 1, 1+w, w, -1, conj(w), -w; this covers every
 * substitution target q -> +/-q^k, +/-w q^k, +/-conj(w) q^k used by the
 * modular equations. */
class RootOfUnity {
  public:
    constexpr RootOfUnity() = default;
    static constexpr RootOfUnity one() { return RootOfUnity(0); }
    static constexpr RootOfUnity minus_one() { return RootOfUnity(3); }
    static constexpr RootOfUnity omega() { return RootOfUnity(2); }
    static constexpr RootOfUnity omega_bar() { return RootOfUnity(4); }
    static constexpr RootOfUnity from_exponent(long j) {
        return RootOfUnity(static_cast<int>(((j % 6) + 6) % 6));
    }

    constexpr int exponent() const { return j_; }
    constexpr bool is_one() const { return j_ == 0; }
    // real means +1 or -1: the only scalars the Integer/Rational rings admit
    constexpr bool is_real() const { return j_ == 0 || j_ == 3; }
    constexpr int real_sign() const { return j_ == 0 ? 1 : -1; }

    constexpr RootOfUnity operator*(RootOfUnity o) const {
        return RootOfUnity((j_ + o.j_) % 6);
    }
    constexpr RootOfUnity pow(long n) const {
        return from_exponent(static_cast<long>(j_) * n);
    }
    constexpr RootOfUnity inverse() const { return RootOfUnity((6 - j_) % 6); }
    constexpr RootOfUnity conj() const {
        // complex conjugation fixes +/-1 and swaps w with conj(w)
        return RootOfUnity((6 - j_) % 6);
    }
    constexpr bool operator==(RootOfUnity o) const { return j_ == o.j_; }
    constexpr bool operator!=(RootOfUnity o) const { return j_ != o.j_; }

    Eisenstein value() const;
    std::string str() const; // "1", "-1", "w", "-w", "wb", "-wb"

  private:
    explicit constexpr RootOfUnity(int j) : j_(j) {}
    int j_ = 0;
};

/* An Eisenstein integer u + v*w with w^2 = -1 - w.  Products are reduced
 * through that relation, so the (u, v) representation is canonical. */
class Eisenstein {
  public:
    Eisenstein() : u_(0), v_(0) {}
    Eisenstein(BigInt u, BigInt v) : u_(std::move(u)), v_(std::move(v)) {}
    Eisenstein(long u, long v = 0) : u_(u), v_(v) {}
    explicit Eisenstein(const BigInt& u) : u_(u), v_(0) {}

    const BigInt& real_part() const { return u_; }
    const BigInt& omega_part() const { return v_; }

    bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
    bool is_one() const { return u_ == 1 && sgn(v_) == 0; }
    bool is_rational_integer() const { return sgn(v_) == 0; }

    Eisenstein operator+(const Eisenstein& o) const {
        return {u_ + o.u_, v_ + o.v_};
    }
    Eisenstein operator-(const Eisenstein& o) const {
        return {u_ - o.u_, v_ - o.v_};
    }
    Eisenstein operator-() const { return {-u_, -v_}; }
    Eisenstein operator*(const Eisenstein& o) const {
        // (u1 + v1 w)(u2 + v2 w), reduced by w^2 = -1 - w
        return {u_ * o.u_ - v_ * o.v_, u_ * o.v_ + v_ * o.u_ - v_ * o.v_};
    }
    Eisenstein& operator+=(const Eisenstein& o) {
        u_ += o.u_;
        v_ += o.v_;
        return *this;
    }
    Eisenstein& operator-=(const Eisenstein& o) {
        u_ -= o.u_;
        v_ -= o.v_;
        return *this;
    }
    Eisenstein& operator*=(const Eisenstein& o) { return *this = *this * o; }

    bool operator==(const Eisenstein& o) const {
        return u_ == o.u_ && v_ == o.v_;
    }
    bool operator!=(const Eisenstein& o) const { return !(*this == o); }

    Eisenstein conj() const { return {u_ - v_, -v_}; }

    // N(u + v w) = u^2 - uv + v^2 >= 0
    BigInt norm() const { return u_ * u_ - u_ * v_ + v_ * v_; }

    bool is_unit() const { return norm() == 1; }
    Eisenstein unit_inverse() const {
        if (!is_unit()) throw UnitError("not a unit of Z[w]");
        return conj();
    }

    // multiply by a sixth root of unity without a full product
    Eisenstein times(RootOfUnity z) const {
        switch (z.exponent()) {
        case 0: return *this;
        case 1: return {u_ - v_, u_};        // * (1 + w)
        case 2: return {-v_, u_ - v_};       // * w
        case 3: return {-u_, -v_};
        case 4: return {v_ - u_, -u_};       // * conj(w)
        default: return {v_, v_ - u_};       // * -w
        }
    }

    std::string str() const;

  private:
    BigInt u_, v_;
};

Eisenstein parse_eisenstein(const std::string& text);

inline bool is_zero(const Eisenstein& x) { return x.is_zero(); }
inline bool is_one(const Eisenstein& x) { return x.is_one(); }
inline std::string to_string(const Eisenstein& x) { return x.str(); }

} // namespace qsw
