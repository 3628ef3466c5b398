#include "qsw/recognize.hpp"

#include "qsw/numtheory.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace qsw {

namespace {

const RootOfUnity kOne = RootOfUnity::one();
const RootOfUnity kOmega = RootOfUnity::omega();
const RootOfUnity kOmegaBar = RootOfUnity::omega_bar();

long exponent_as_long(const BigInt& r) {
    if (!r.fits_slong_p() || r > 1000000 || r < -1000000)
        throw DomainError("product exponent too large to expand: " +
                          to_string(r));
    return r.get_si();
}

void apply_power(Series& f, long k, RootOfUnity zeta, const BigInt& raw) {
    long e = exponent_as_long(raw);
    for (long i = 0; i < (e > 0 ? e : -e); ++i) {
        if (e > 0)
            mul_one_minus(f, k, zeta);
        else
            div_one_minus(f, k, zeta);
    }
}

void require_unit_start(const Series& f) {
    bool ok = false;
    switch (f.ring()) {
    case Ring::Integer: ok = is_one(f.at_int(0)); break;
    case Ring::Rational: ok = is_one(f.at_rat(0)); break;
    default: ok = f.at_eis(0).is_one();
    }
    if (!ok)
        throw DomainError("recognition needs constant term exactly 1, got " +
                          f.coeff_str(0));
}

BigInt median3(BigInt a, BigInt b, BigInt c) {
    std::array<BigInt, 3> v{std::move(a), std::move(b), std::move(c)};
    std::sort(v.begin(), v.end());
    return v[1];
}

} // namespace

void ProductForm::add(long k, BigInt r1, BigInt rw, BigInt rwb) {
    ExponentTriple t{std::move(r1), std::move(rw), std::move(rwb)};
    if (t.is_zero()) return;
    auto it = entries.find(k);
    if (it == entries.end()) {
        entries.emplace(k, std::move(t));
        return;
    }
    it->second.r1 += t.r1;
    it->second.rw += t.rw;
    it->second.rwb += t.rwb;
    if (it->second.is_zero()) entries.erase(it);
}

RecognitionReport recognize_int(const Series& f, long N) {
    if (f.ring() == Ring::Eisenstein)
        throw RingMixError("recognize_int takes Integer or Rational series");
    if (N > f.order())
        throw OrderError("recognition order exceeds the series order");
    require_unit_start(f);
    Series c = q_logderiv(f.truncate(N));

    RecognitionReport report;
    report.form.max_order = N;
    report.form.ring = Ring::Integer;
    for (long k = 1; k <= N; ++k) {
        // r_k = (1/k) sum_{d|k} mu(k/d) c_d, which must land in Z
        Rational acc(0);
        for (long d : divisors(k)) {
            int mu = moebius(k / d);
            if (mu == 0) continue;
            Rational cd = c.ring() == Ring::Integer ? Rational(c.at_int(d))
                                                    : c.at_rat(d);
            if (mu > 0)
                acc += cd;
            else
                acc -= cd;
        }
        Rational rk = acc / Rational(k);
        if (!is_integer(rk)) {
            report.failure = RecognitionFailure{k, rk};
            report.residual_ok = false;
            return report;
        }
        report.form.add(k, rk.get_num());
    }
    Series rebuilt = build_product(report.form, N);
    report.residual_ok = series_equal(rebuilt, f.truncate(N), N).equal;
    return report;
}

RecognitionReport recognize_eis(const Series& f, long N) {
    if (f.ring() != Ring::Eisenstein)
        throw RingMixError("recognize_eis takes an Eisenstein-ring series");
    if (N > f.order())
        throw OrderError("recognition order exceeds the series order");
    require_unit_start(f);

    RecognitionReport report;
    report.form.max_order = N;
    report.form.ring = Ring::Eisenstein;

    Series residual = f.truncate(N);
    for (long k = 1; k <= N; ++k) {
        const Eisenstein& c = residual.at_eis(k);
        if (c.is_zero()) continue;
        // residual = 1 - (A + Bw) q^k + ...; triples (A+t, B+t, t) all work
        BigInt a = -c.real_part();
        BigInt b = -c.omega_part();
        BigInt t = median3(BigInt(0), -a, -b);
        BigInt r1 = a + t, rw = b + t, rwb = t;
        apply_power(residual, k, kOne, -r1);
        apply_power(residual, k, kOmega, -rw);
        apply_power(residual, k, kOmegaBar, -rwb);
        if (!residual.at_eis(k).is_zero())
            throw DomainError("internal: residual not cleared at degree " +
                              std::to_string(k));
        report.form.add(k, r1, rw, rwb);
    }
    Series rebuilt = build_product(report.form, N);
    report.residual_ok = series_equal(rebuilt, f.truncate(N), N).equal;
    return report;
}

Series build_product(const ProductForm& p, long N) {
    if (N > p.max_order)
        throw OrderError("expansion order exceeds the form's max order");
    Series out = Series::one(p.ring, N);
    for (const auto& [k, t] : p.entries) {
        if (k > N) break;
        apply_power(out, k, kOne, t.r1);
        if (p.ring == Ring::Eisenstein) {
            apply_power(out, k, kOmega, t.rw);
            apply_power(out, k, kOmegaBar, t.rwb);
        } else if (sgn(t.rw) != 0 || sgn(t.rwb) != 0) {
            throw RingMixError("integer form with nonzero w-exponents");
        }
    }
    return out;
}

bool equivalent(const ProductForm& p1, const ProductForm& p2, long N) {
    long n = std::min({N, p1.max_order, p2.max_order});
    Series a = build_product(p1, n);
    Series b = build_product(p2, n);
    return series_equal(a, b, n).equal;
}

ProductForm conj_form(const ProductForm& p) {
    ProductForm out;
    out.max_order = p.max_order;
    out.ring = p.ring;
    for (const auto& [k, t] : p.entries) out.add(k, t.r1, t.rwb, t.rw);
    return out;
}

ProductForm norm_image(const ProductForm& p, long N) {
    /* F conj(F) carries (1-q^k)^{2 r1} ((1-w q^k)(1-wb q^k))^{rw+rwb}
     * = (1-q^k)^{2 r1 - (rw+rwb)} (1-q^{3k})^{rw+rwb}; factors beyond N
     * are invisible at this order and are dropped. */
    ProductForm out;
    out.max_order = N;
    out.ring = Ring::Integer;
    for (const auto& [k, t] : p.entries) {
        if (k > N) continue;
        BigInt pair = t.rw + t.rwb;
        out.add(k, 2 * t.r1 - pair);
        if (3 * k <= N) out.add(3 * k, pair);
    }
    return out;
}

bool norm_crosscheck(const Series& f, long N) {
    if (f.ring() != Ring::Eisenstein)
        throw RingMixError("norm_crosscheck takes an Eisenstein-ring series");
    if (N > f.order())
        throw OrderError("crosscheck order exceeds the series order");

    // F conj(F) has conjugation-invariant coefficients, i.e. lies over Z
    Series conj_f(Ring::Eisenstein, f.order());
    for (long n = 0; n <= f.order(); ++n)
        conj_f.set(n, f.at_eis(n).conj());
    Series norm_eis = series_mul(f, conj_f);
    Series norm(Ring::Integer, N);
    for (long n = 0; n <= N; ++n) {
        const Eisenstein& c = norm_eis.at_eis(n);
        if (sgn(c.omega_part()) != 0)
            throw DomainError("norm series has a nonzero w-component");
        norm.set(n, c.real_part());
    }

    RecognitionReport eis = recognize_eis(f, N);
    RecognitionReport whole = recognize_int(norm, N);
    if (!eis.residual_ok || !whole.residual_ok) return false;
    return equivalent(norm_image(eis.form, N), whole.form, N);
}

std::string form_dump(const ProductForm& p) {
    std::ostringstream out;
    for (const auto& [k, t] : p.entries)
        out << k << " " << to_string(t.r1) << " " << to_string(t.rw) << " "
            << to_string(t.rwb) << "\n";
    return out.str();
}

ProductForm form_parse(const std::string& text) {
    ProductForm p;
    p.ring = Ring::Integer;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long k = 0;
        std::string r1, rw, rwb;
        if (!(ls >> k >> r1 >> rw >> rwb))
            throw ParseError("bad product-form line: " + line, 0);
        if (k < 1) throw ParseError("factor index must be >= 1", 0);
        BigInt w = parse_bigint(rw), wb = parse_bigint(rwb);
        if (sgn(w) != 0 || sgn(wb) != 0) p.ring = Ring::Eisenstein;
        p.add(k, parse_bigint(r1), std::move(w), std::move(wb));
        p.max_order = std::max(p.max_order, k);
    }
    return p;
}

namespace {

struct Slot {
    const char* prefix; // "", "w", "wb"
    BigInt ExponentTriple::*member;
};

/* Group one exponent slot into residue classes: find the smallest base
 * b <= 24 such that, within 1..N, every class s mod b carries a constant
 * exponent and every index with a nonzero exponent is covered. */
bool try_periodic(const std::map<long, BigInt>& exps, long N, long b,
                  std::map<long, BigInt>& classes) {
    classes.clear();
    for (long s = 1; s <= b; ++s) {
        bool first = true;
        BigInt value;
        for (long k = s; k <= N; k += b) {
            auto it = exps.find(k);
            BigInt here = it == exps.end() ? BigInt(0) : it->second;
            if (first) {
                value = here;
                first = false;
            } else if (here != value) {
                return false;
            }
        }
        if (!first && sgn(value) != 0) classes[s] = value;
    }
    return true;
}

void append_poch(std::ostringstream& out, const char* prefix,
                 const std::vector<long>& offsets, long b, const BigInt& e) {
    out << "(";
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (i) out << ",";
        out << prefix << "q";
        if (offsets[i] != 1) out << "^" << offsets[i];
    }
    out << ";q";
    if (b != 1) out << "^" << b;
    out << ")_inf";
    if (e != 1) out << "^" << to_string(e);
}

void append_single(std::ostringstream& out, const char* prefix, long k,
                   const BigInt& e) {
    out << "(1-" << prefix << "q";
    if (k != 1) out << "^" << k;
    out << ")";
    if (e != 1) out << "^" << to_string(e);
}

} // namespace

std::string form_pretty(const ProductForm& p) {
    if (p.entries.empty()) return "1";
    const long N = p.max_order;
    const Slot slots[3] = {{"", &ExponentTriple::r1},
                           {"w", &ExponentTriple::rw},
                           {"wb", &ExponentTriple::rwb}};
    std::ostringstream out;
    bool wrote = false;
    for (const auto& slot : slots) {
        std::map<long, BigInt> exps;
        for (const auto& [k, t] : p.entries)
            if (sgn(t.*slot.member) != 0) exps[k] = t.*slot.member;
        if (exps.empty()) continue;

        bool grouped = false;
        if (exps.size() >= 4) {
            for (long b = 1; b <= 24 && !grouped; ++b) {
                if (2 * b > N + 1) break; // need each class witnessed twice
                std::map<long, BigInt> classes;
                if (!try_periodic(exps, N, b, classes)) continue;
                // offsets sharing an exponent merge into one symbol
                std::vector<std::pair<BigInt, std::vector<long>>> merged;
                for (const auto& [s, e] : classes) {
                    bool found = false;
                    for (auto& [me, ms] : merged)
                        if (me == e) {
                            ms.push_back(s);
                            found = true;
                        }
                    if (!found) merged.push_back({e, {s}});
                }
                for (const auto& [e, offsets] : merged) {
                    if (wrote) out << " ";
                    append_poch(out, slot.prefix, offsets, b, e);
                    wrote = true;
                }
                grouped = true;
            }
        }
        if (!grouped) {
            for (const auto& [k, e] : exps) {
                if (wrote) out << " ";
                append_single(out, slot.prefix, k, e);
                wrote = true;
            }
        }
    }
    return wrote ? out.str() : "1";
}

} // namespace qsw
