#include "qsw/series.hpp"

#include <sstream>

namespace qsw {

std::string ring_name(Ring r) {
    switch (r) {
    case Ring::Integer: return "int";
    case Ring::Rational: return "rat";
    default: return "eis";
    }
}

Ring ring_from_name(const std::string& name) {
    if (name == "int") return Ring::Integer;
    if (name == "rat") return Ring::Rational;
    if (name == "eis") return Ring::Eisenstein;
    throw DomainError("unknown ring name: '" + name + "' (want int|rat|eis)");
}

Ring unify_rings(Ring a, Ring b) {
    if (a == b) return a;
    if (a == Ring::Integer) return b;
    if (b == Ring::Integer) return a;
    throw RingMixError("cannot mix Rational and Eisenstein coefficients");
}

namespace {

template <class T> T from_long(long n) { return T(n); }
template <> Eisenstein from_long<Eisenstein>(long n) { return {BigInt(n), BigInt(0)}; }

template <class T> T ring_one() { return from_long<T>(1); }

template <class T> T unit_inverse_of(const T& c);
template <> BigInt unit_inverse_of(const BigInt& c) {
    if (c == 1 || c == -1) return c;
    throw UnitError("constant term " + to_string(c) + " is not a unit of Z");
}
template <> Rational unit_inverse_of(const Rational& c) {
    if (sgn(c) == 0) throw UnitError("constant term 0 is not invertible");
    return Rational(1) / c;
}
template <> Eisenstein unit_inverse_of(const Eisenstein& c) {
    if (!c.is_unit())
        throw UnitError("constant term " + c.str() + " is not a unit of Z[w]");
    return c.conj();
}

template <class T> T zeta_scale(RootOfUnity z, const T& x) {
    // non-real roots of unity are rejected before real rings get here
    return z.real_sign() < 0 ? T(-x) : x;
}
template <> Eisenstein zeta_scale(RootOfUnity z, const Eisenstein& x) {
    return x.times(z);
}

template <class T>
void mul_vec(const std::vector<T>& a, const std::vector<T>& b,
             std::vector<T>& out) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n && i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        std::size_t jmax = std::min(b.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (is_zero(b[j])) continue;
            out[i + j] += a[i] * b[j];
        }
    }
}

template <class T>
std::vector<T> inverse_vec(const std::vector<T>& a) {
    std::vector<T> b(a.size());
    T inv0 = unit_inverse_of(a[0]);
    b[0] = inv0;
    for (std::size_t n = 1; n < a.size(); ++n) {
        T acc = from_long<T>(0);
        for (std::size_t k = 1; k <= n; ++k) {
            if (is_zero(a[k]) || is_zero(b[n - k])) continue;
            acc += a[k] * b[n - k];
        }
        b[n] = -(inv0 * acc);
    }
    return b;
}

template <class T>
std::vector<T> logderiv_vec(const std::vector<T>& a) {
    // L with L*F = -qF': L_n = -n a_n - sum_{k=1}^{n-1} L_k a_{n-k}
    if (!is_one(a[0]))
        throw UnitError("q_logderiv needs constant term exactly 1");
    std::vector<T> l(a.size(), from_long<T>(0));
    for (std::size_t n = 1; n < a.size(); ++n) {
        T acc = from_long<T>(-static_cast<long>(n)) * a[n];
        for (std::size_t k = 1; k < n; ++k) {
            if (is_zero(l[k]) || is_zero(a[n - k])) continue;
            acc -= l[k] * a[n - k];
        }
        l[n] = acc;
    }
    return l;
}

} // namespace

Series::Series(Ring ring, long order) : ring_(ring), order_(order) {
    if (order < 0) throw OrderError("series order must be >= 0");
    switch (ring) {
    case Ring::Integer:
        coeffs_ = std::vector<BigInt>(static_cast<std::size_t>(order) + 1);
        break;
    case Ring::Rational:
        coeffs_ = std::vector<Rational>(static_cast<std::size_t>(order) + 1);
        break;
    default:
        coeffs_ = std::vector<Eisenstein>(static_cast<std::size_t>(order) + 1);
    }
}

Series Series::one(Ring ring, long order) {
    Series s(ring, order);
    switch (ring) {
    case Ring::Integer: s.ints()[0] = 1; break;
    case Ring::Rational: s.rats()[0] = 1; break;
    default: s.eiss()[0] = Eisenstein(1, 0);
    }
    return s;
}

Series Series::monomial(Ring ring, long order, long degree) {
    Series s(ring, order);
    if (degree < 0 || degree > order)
        throw OrderError("monomial degree outside [0, order]");
    switch (ring) {
    case Ring::Integer: s.ints()[degree] = 1; break;
    case Ring::Rational: s.rats()[degree] = 1; break;
    default: s.eiss()[degree] = Eisenstein(1, 0);
    }
    return s;
}

std::vector<BigInt>& Series::ints() { return std::get<std::vector<BigInt>>(coeffs_); }
std::vector<Rational>& Series::rats() { return std::get<std::vector<Rational>>(coeffs_); }
std::vector<Eisenstein>& Series::eiss() { return std::get<std::vector<Eisenstein>>(coeffs_); }
const std::vector<BigInt>& Series::ints() const { return std::get<std::vector<BigInt>>(coeffs_); }
const std::vector<Rational>& Series::rats() const { return std::get<std::vector<Rational>>(coeffs_); }
const std::vector<Eisenstein>& Series::eiss() const { return std::get<std::vector<Eisenstein>>(coeffs_); }

namespace {
void check_index(long n, long order) {
    if (n < 0 || n > order)
        throw OrderError("coefficient index " + std::to_string(n) +
                         " outside guaranteed order " + std::to_string(order));
}
} // namespace

const BigInt& Series::at_int(long n) const {
    check_index(n, order_);
    if (ring_ != Ring::Integer) throw DomainError("series is not Integer-ring");
    return ints()[n];
}
const Rational& Series::at_rat(long n) const {
    check_index(n, order_);
    if (ring_ != Ring::Rational) throw DomainError("series is not Rational-ring");
    return rats()[n];
}
const Eisenstein& Series::at_eis(long n) const {
    check_index(n, order_);
    if (ring_ != Ring::Eisenstein) throw DomainError("series is not Eisenstein-ring");
    return eiss()[n];
}

std::string Series::coeff_str(long n) const {
    check_index(n, order_);
    switch (ring_) {
    case Ring::Integer: return to_string(ints()[n]);
    case Ring::Rational: return to_string(rats()[n]);
    default: return eiss()[n].str();
    }
}

bool Series::coeff_is_zero(long n) const {
    check_index(n, order_);
    switch (ring_) {
    case Ring::Integer: return is_zero(ints()[n]);
    case Ring::Rational: return is_zero(rats()[n]);
    default: return eiss()[n].is_zero();
    }
}

void Series::set(long n, BigInt v) {
    check_index(n, order_);
    switch (ring_) {
    case Ring::Integer: ints()[n] = std::move(v); break;
    case Ring::Rational: rats()[n] = Rational(v); break;
    default: eiss()[n] = Eisenstein(std::move(v), BigInt(0));
    }
}
void Series::set(long n, Rational v) {
    check_index(n, order_);
    if (ring_ != Ring::Rational)
        throw RingMixError("rational coefficient in a non-Rational series");
    rats()[n] = std::move(v);
}
void Series::set(long n, Eisenstein v) {
    check_index(n, order_);
    if (ring_ != Ring::Eisenstein)
        throw RingMixError("Eisenstein coefficient in a non-Eisenstein series");
    eiss()[n] = std::move(v);
}

Series Series::convert(Ring target) const {
    if (target == ring_) return *this;
    if (ring_ != Ring::Integer)
        throw RingMixError("only Integer-ring series embed into other rings");
    Series out(target, order_);
    const auto& src = ints();
    for (long n = 0; n <= order_; ++n) {
        if (is_zero(src[n])) continue;
        if (target == Ring::Rational)
            out.rats()[n] = Rational(src[n]);
        else
            out.eiss()[n] = Eisenstein(src[n]);
    }
    return out;
}

Series Series::truncate(long new_order) const {
    if (new_order > order_)
        throw OrderError("cannot truncate to a larger order");
    Series out(ring_, new_order);
    switch (ring_) {
    case Ring::Integer:
        out.ints().assign(ints().begin(), ints().begin() + new_order + 1);
        break;
    case Ring::Rational:
        out.rats().assign(rats().begin(), rats().begin() + new_order + 1);
        break;
    default:
        out.eiss().assign(eiss().begin(), eiss().begin() + new_order + 1);
    }
    return out;
}

namespace {

// unify rings and truncate both to the common guaranteed order
std::pair<Series, Series> align(const Series& f, const Series& g) {
    Ring r = unify_rings(f.ring(), g.ring());
    long n = std::min(f.order(), g.order());
    return {f.convert(r).truncate(n), g.convert(r).truncate(n)};
}

template <class T>
void add_vec(std::vector<T>& a, const std::vector<T>& b, bool subtract) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (subtract)
            a[i] -= b[i];
        else
            a[i] += b[i];
    }
}

} // namespace

Series series_add(const Series& f, const Series& g) {
    auto [a, b] = align(f, g);
    switch (a.ring()) {
    case Ring::Integer: add_vec(a.ints(), b.ints(), false); break;
    case Ring::Rational: add_vec(a.rats(), b.rats(), false); break;
    default: add_vec(a.eiss(), b.eiss(), false);
    }
    return a;
}

Series series_sub(const Series& f, const Series& g) {
    auto [a, b] = align(f, g);
    switch (a.ring()) {
    case Ring::Integer: add_vec(a.ints(), b.ints(), true); break;
    case Ring::Rational: add_vec(a.rats(), b.rats(), true); break;
    default: add_vec(a.eiss(), b.eiss(), true);
    }
    return a;
}

Series series_neg(const Series& f) {
    Series out = f;
    switch (out.ring()) {
    case Ring::Integer:
        for (auto& c : out.ints()) c = -c;
        break;
    case Ring::Rational:
        for (auto& c : out.rats()) c = -c;
        break;
    default:
        for (auto& c : out.eiss()) c = -c;
    }
    return out;
}

Series series_mul(const Series& f, const Series& g) {
    auto [a, b] = align(f, g);
    Series out(a.ring(), a.order());
    switch (a.ring()) {
    case Ring::Integer: mul_vec(a.ints(), b.ints(), out.ints()); break;
    case Ring::Rational: mul_vec(a.rats(), b.rats(), out.rats()); break;
    default: mul_vec(a.eiss(), b.eiss(), out.eiss());
    }
    return out;
}

Series series_inverse(const Series& f) {
    Series out(f.ring(), f.order());
    switch (f.ring()) {
    case Ring::Integer: out.ints() = inverse_vec(f.ints()); break;
    case Ring::Rational: out.rats() = inverse_vec(f.rats()); break;
    default: out.eiss() = inverse_vec(f.eiss());
    }
    return out;
}

Series series_div(const Series& f, const Series& g) {
    auto [a, b] = align(f, g);
    return series_mul(a, series_inverse(b));
}

Series series_pow(const Series& f, long e) {
    if (e < 0) return series_pow(series_inverse(f), -e);
    Series acc = Series::one(f.ring(), f.order());
    Series base = f;
    // binary powering; exponents here are tiny, but it costs nothing
    while (e > 0) {
        if (e & 1) acc = series_mul(acc, base);
        e >>= 1;
        if (e > 0) base = series_mul(base, base);
    }
    return acc;
}

Series q_logderiv(const Series& f) {
    Series out(f.ring(), f.order());
    switch (f.ring()) {
    case Ring::Integer: out.ints() = logderiv_vec(f.ints()); break;
    case Ring::Rational: out.rats() = logderiv_vec(f.rats()); break;
    default: out.eiss() = logderiv_vec(f.eiss());
    }
    return out;
}

Series series_substitute(const Series& f, RootOfUnity zeta, long k) {
    if (k < 1) throw DomainError("substitution stride must be >= 1");
    if (!zeta.is_real() && f.ring() == Ring::Rational)
        throw RingMixError("complex substitution into a Rational series");
    Ring target = zeta.is_real() ? f.ring() : Ring::Eisenstein;
    long n_out = (f.order() + 1) * k - 1;
    Series src = f.convert(target);
    Series out(target, n_out);
    RootOfUnity zj = RootOfUnity::one();
    for (long j = 0; j <= f.order(); ++j) {
        if (!src.coeff_is_zero(j)) {
            switch (target) {
            case Ring::Integer:
                out.ints()[j * k] = zeta_scale(zj, src.ints()[j]);
                break;
            case Ring::Rational:
                out.rats()[j * k] = zeta_scale(zj, src.rats()[j]);
                break;
            default:
                out.eiss()[j * k] = zeta_scale(zj, src.eiss()[j]);
            }
        }
        zj = zj * zeta;
    }
    return out;
}

EqualityResult series_equal(const Series& f, const Series& g, long up_to) {
    if (up_to < 0) throw OrderError("comparison order must be >= 0");
    if (up_to > std::min(f.order(), g.order()))
        throw OrderError("comparison through degree " + std::to_string(up_to) +
                         " exceeds the guaranteed order " +
                         std::to_string(std::min(f.order(), g.order())));
    Ring r = unify_rings(f.ring(), g.ring());
    Series a = f.convert(r), b = g.convert(r);
    for (long n = 0; n <= up_to; ++n) {
        bool same = false;
        switch (r) {
        case Ring::Integer: same = a.ints()[n] == b.ints()[n]; break;
        case Ring::Rational: same = a.rats()[n] == b.rats()[n]; break;
        default: same = a.eiss()[n] == b.eiss()[n];
        }
        if (!same) return {false, n, a.coeff_str(n), b.coeff_str(n)};
    }
    return {};
}

namespace {
void check_factor_args(const Series& f, long m, RootOfUnity zeta) {
    if (m < 1) throw DomainError("factor exponent must be >= 1");
    if (!zeta.is_real() && f.ring() != Ring::Eisenstein)
        throw RingMixError("complex factor over a non-Eisenstein series");
}

template <class T>
void mul_one_minus_vec(std::vector<T>& c, long m, RootOfUnity zeta) {
    for (long i = static_cast<long>(c.size()) - 1; i >= m; --i) {
        if (is_zero(c[i - m])) continue;
        c[i] -= zeta_scale(zeta, c[i - m]);
    }
}

template <class T>
void div_one_minus_vec(std::vector<T>& c, long m, RootOfUnity zeta) {
    for (long i = m; i < static_cast<long>(c.size()); ++i) {
        if (is_zero(c[i - m])) continue;
        c[i] += zeta_scale(zeta, c[i - m]);
    }
}
} // namespace

void mul_one_minus(Series& f, long m, RootOfUnity zeta) {
    check_factor_args(f, m, zeta);
    if (m > f.order()) return;
    switch (f.ring()) {
    case Ring::Integer: mul_one_minus_vec(f.ints(), m, zeta); break;
    case Ring::Rational: mul_one_minus_vec(f.rats(), m, zeta); break;
    default: mul_one_minus_vec(f.eiss(), m, zeta);
    }
}

void div_one_minus(Series& f, long m, RootOfUnity zeta) {
    check_factor_args(f, m, zeta);
    if (m > f.order()) return;
    switch (f.ring()) {
    case Ring::Integer: div_one_minus_vec(f.ints(), m, zeta); break;
    case Ring::Rational: div_one_minus_vec(f.rats(), m, zeta); break;
    default: div_one_minus_vec(f.eiss(), m, zeta);
    }
}

void add_scaled_shift(Series& acc, const Series& t, long shift,
                      RootOfUnity zeta) {
    if (acc.ring() != t.ring())
        throw RingMixError("add_scaled_shift needs identical rings");
    if (shift < 0) throw DomainError("shift must be >= 0");
    if (!zeta.is_real() && acc.ring() != Ring::Eisenstein)
        throw RingMixError("complex scale over a non-Eisenstein series");
    long n = acc.order();
    for (long i = 0; i + shift <= n && i <= t.order(); ++i) {
        if (t.coeff_is_zero(i)) continue;
        switch (acc.ring()) {
        case Ring::Integer:
            acc.ints()[i + shift] += zeta_scale(zeta, t.ints()[i]);
            break;
        case Ring::Rational:
            acc.rats()[i + shift] += zeta_scale(zeta, t.rats()[i]);
            break;
        default:
            acc.eiss()[i + shift] += zeta_scale(zeta, t.eiss()[i]);
        }
    }
}

std::string series_dump(const Series& f) {
    std::ostringstream out;
    for (long n = 0; n <= f.order(); ++n)
        out << n << ": " << f.coeff_str(n) << "\n";
    return out.str();
}

Series series_parse(const std::string& text, Ring ring) {
    struct Entry {
        long n;
        std::string value;
    };
    std::vector<Entry> entries;
    long max_n = -1;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("coefficient line without ':': " + line, 0);
        long n = 0;
        try {
            n = std::stol(line.substr(0, colon));
        } catch (const std::exception&) {
            throw ParseError("bad degree in line: " + line, 0);
        }
        if (n < 0) throw ParseError("negative degree in line: " + line, 0);
        std::string value = line.substr(colon + 1);
        auto b = value.find_first_not_of(" \t\r");
        auto e = value.find_last_not_of(" \t\r");
        if (b == std::string::npos)
            throw ParseError("missing value in line: " + line, 0);
        entries.push_back({n, value.substr(b, e - b + 1)});
        max_n = std::max(max_n, n);
    }
    if (max_n < 0) throw ParseError("no coefficient lines found", 0);
    Series out(ring, max_n);
    std::vector<bool> seen(static_cast<std::size_t>(max_n) + 1, false);
    for (const auto& entry : entries) {
        if (seen[entry.n])
            throw ParseError("duplicate degree " + std::to_string(entry.n), 0);
        seen[entry.n] = true;
        switch (ring) {
        case Ring::Integer: out.set(entry.n, parse_bigint(entry.value)); break;
        case Ring::Rational: out.set(entry.n, parse_rational(entry.value)); break;
        default: out.set(entry.n, parse_eisenstein(entry.value));
        }
    }
    return out;
}

} // namespace qsw
