#include "qsw/catalog.hpp"

#include <map>
#include <sstream>

namespace qsw {

namespace {

constexpr long kInf = FactorSpec::kInf;

FactorSpec fac(RootOfUnity z, long s, long b, int e, long count = kInf) {
    FactorSpec f;
    f.zeta = z;
    f.s = s;
    f.b = b;
    f.e = e;
    f.count = count;
    return f;
}

const RootOfUnity kOne = RootOfUnity::one();
const RootOfUnity kMinus = RootOfUnity::minus_one();
const RootOfUnity kOmega = RootOfUnity::omega();
const RootOfUnity kOmegaBar = RootOfUnity::omega_bar();

std::vector<FactorSpec> inv_poch(std::initializer_list<long> offsets, long b) {
    std::vector<FactorSpec> out;
    for (long s : offsets) out.push_back(fac(kOne, s, b, -1));
    return out;
}

const std::map<std::string, std::vector<FactorSpec>>& fixed_products() {
    static const std::map<std::string, std::vector<FactorSpec>> table = {
        {"G", inv_poch({1, 4}, 5)},
        {"H", inv_poch({2, 3}, 5)},
        {"A", inv_poch({1, 2, 5, 6}, 7)},
        {"B", inv_poch({1, 3, 4, 6}, 7)},
        {"C", inv_poch({2, 3, 4, 5}, 7)},
        {"K1", inv_poch({1, 3, 6, 8}, 9)},
        {"K2", inv_poch({2, 3, 6, 7}, 9)},
        {"K3", inv_poch({3, 4, 5, 6}, 9)},
        {"K4", inv_poch({2, 3, 5, 8}, 9)},
        {"K5", inv_poch({1, 4, 6, 7}, 9)},
        {"K4b", inv_poch({2, 3, 5, 8}, 9)},
        {"K5b", inv_poch({1, 4, 6, 7}, 9)},
        {"K6",
         {fac(kOne, 6, 9, 1), fac(kOmega, 1, 3, 1), fac(kOmegaBar, 3, 3, 1),
          fac(kOne, 2, 3, -1)}},
        {"K6b",
         {fac(kOne, 6, 9, 1), fac(kOmegaBar, 1, 3, 1), fac(kOmega, 3, 3, 1),
          fac(kOne, 2, 3, -1)}},
        {"K7",
         {fac(kOne, 3, 9, 1), fac(kOmega, 2, 3, 1), fac(kOmegaBar, 3, 3, 1),
          fac(kOne, 1, 3, -1)}},
        {"K7b",
         {fac(kOne, 3, 9, 1), fac(kOmegaBar, 2, 3, 1), fac(kOmega, 3, 3, 1),
          fac(kOne, 1, 3, -1)}},
        {"K", inv_poch({1, 2}, 3)},
    };
    return table;
}

// "AG(m,i)" / "ETA(b)" id forms
bool parse_two_args(const std::string& id, const std::string& head, long& x,
                    long& y, bool two) {
    if (id.size() < head.size() + 3 || id.compare(0, head.size(), head) != 0)
        return false;
    if (id[head.size()] != '(' || id.back() != ')') return false;
    std::string inner = id.substr(head.size() + 1, id.size() - head.size() - 2);
    std::istringstream in(inner);
    char comma = 0;
    if (two) {
        if (!(in >> x >> comma >> y) || comma != ',') return false;
    } else {
        if (!(in >> x)) return false;
        y = 0;
    }
    in >> std::ws;
    return in.eof();
}

bool parse_ag(const std::string& id, long& m, long& i) {
    return parse_two_args(id, "AG", m, i, true);
}

bool parse_eta(const std::string& id, long& b) {
    long dummy = 0;
    return parse_two_args(id, "ETA", b, dummy, false);
}

void shift_up(Series& f, long s) {
    if (s == 0) return;
    if (s < 0) throw DomainError("shift must be >= 0");
    long n = f.order();
    switch (f.ring()) {
    case Ring::Integer: {
        auto& c = f.ints();
        for (long i = n; i >= s; --i) c[i] = c[i - s];
        for (long i = 0; i < std::min(s, n + 1); ++i) c[i] = 0;
        break;
    }
    case Ring::Rational: {
        auto& c = f.rats();
        for (long i = n; i >= s; --i) c[i] = c[i - s];
        for (long i = 0; i < std::min(s, n + 1); ++i) c[i] = 0;
        break;
    }
    default: {
        auto& c = f.eiss();
        for (long i = n; i >= s; --i) c[i] = c[i - s];
        for (long i = 0; i < std::min(s, n + 1); ++i) c[i] = Eisenstein();
    }
    }
}

Series sum_G(long N) {
    Series acc = Series::one(Ring::Integer, N);
    Series t = Series::one(Ring::Integer, N);
    for (long k = 1; k * k <= N; ++k) {
        shift_up(t, 2 * k - 1); // q^{k^2}
        div_one_minus(t, k, kOne);
        add_scaled_shift(acc, t, 0, kOne);
    }
    return acc;
}

Series sum_H(long N) {
    Series acc = Series::one(Ring::Integer, N);
    Series t = Series::one(Ring::Integer, N);
    for (long k = 1; k * (k + 1) <= N; ++k) {
        shift_up(t, 2 * k); // q^{k(k+1)}
        div_one_minus(t, k, kOne);
        add_scaled_shift(acc, t, 0, kOne);
    }
    return acc;
}

/* Rogers-Selberg sums share the prefactor (-q;q)_inf and the denominators
 * (q^4;q^4)_k (-q;q^2)_{k+d} with d = 0 (A, B) or 1 (C). */
Series sum_rs(long N, bool square_exponent, bool extra_odd_factor) {
    Series t = Series::one(Ring::Integer, N);
    if (extra_odd_factor) div_one_minus(t, 1, kMinus); // (-q;q^2)_1
    Series acc = t;
    for (long k = 1;; ++k) {
        long e = square_exponent ? 2 * k * k : 2 * k * (k + 1);
        if (e > N) break;
        long prev = square_exponent ? 2 * (k - 1) * (k - 1) : 2 * (k - 1) * k;
        shift_up(t, e - prev);
        div_one_minus(t, 4 * k, kOne);
        long odd = extra_odd_factor ? 2 * k + 1 : 2 * k - 1;
        div_one_minus(t, odd, kMinus);
        add_scaled_shift(acc, t, 0, kOne);
    }
    Series prefactor = build_factors({fac(kMinus, 1, 1, 1)}, N);
    return series_mul(prefactor, acc);
}

/* Double sums sum_{m,n>=0} q^{m^2+3mn+3n^2+lm*m+ln*n} (1 - zc q^{cm*m+cn*n+c0})
 * / ((q;q)_m (q^3;q^3)_n); the exponent is monotone along both directions,
 * so the loop bounds are exact, not heuristic. */
struct DoubleSumDef {
    long lm = 0, ln = 0;
    bool corr = false;
    RootOfUnity corr_zeta = RootOfUnity::one();
    long cm = 0, cn = 0, c0 = 0;
};

long kr_exponent(const DoubleSumDef& d, long m, long n) {
    return m * m + 3 * m * n + 3 * n * n + d.lm * m + d.ln * n;
}

Series sum_double(const DoubleSumDef& d, long N) {
    Ring ring = d.corr && !d.corr_zeta.is_real() ? Ring::Eisenstein : Ring::Integer;
    Series acc(ring, N);
    Series row = Series::one(ring, N); // q^{E(0,n)} / (q^3;q^3)_n
    RootOfUnity minus_corr = d.corr_zeta * kMinus;
    for (long n = 0; kr_exponent(d, 0, n) <= N; ++n) {
        if (n > 0) {
            shift_up(row, kr_exponent(d, 0, n) - kr_exponent(d, 0, n - 1));
            div_one_minus(row, 3 * n, kOne);
        }
        Series t = row;
        for (long m = 0; kr_exponent(d, m, n) <= N; ++m) {
            if (m > 0) {
                shift_up(t, kr_exponent(d, m, n) - kr_exponent(d, m - 1, n));
                div_one_minus(t, m, kOne);
            }
            add_scaled_shift(acc, t, 0, kOne);
            if (d.corr) {
                long ce = d.cm * m + d.cn * n + d.c0;
                if (ce <= N) add_scaled_shift(acc, t, ce, minus_corr);
            }
        }
    }
    return acc;
}

const std::map<std::string, DoubleSumDef>& double_sums() {
    static const std::map<std::string, DoubleSumDef> table = {
        {"K1", {0, 0, false, kOne, 0, 0, 0}},
        {"K2", {1, 3, false, kOne, 0, 0, 0}},
        {"K3", {2, 3, false, kOne, 0, 0, 0}},
        {"K4", {1, 2, false, kOne, 0, 0, 0}},
        {"K5", {-1, 1, true, kOne, 2, 0, 0}},
        {"K6", {1, 1, true, kOmega, 1, 3, 1}},
        {"K7", {0, 2, true, kOmega, 3, 3, 2}},
        {"K4b", {1, 2, false, kOne, 0, 0, 0}},
        {"K5b", {-1, 1, true, kOne, 2, 0, 0}},
        {"K6b", {1, 1, true, kOmegaBar, 1, 3, 1}},
        {"K7b", {0, 2, true, kOmegaBar, 3, 3, 2}},
    };
    return table;
}

// AG(5,i) and AG(7,i) coincide with named functions whose sums are known
std::string ag_alias(long m, long i) {
    if (m == 5) return i == 1 ? "H" : "G";
    if (m == 7) return i == 1 ? "C" : (i == 2 ? "B" : "A");
    return {};
}

} // namespace

Series build_factors(const std::vector<FactorSpec>& specs, long N) {
    Ring ring = Ring::Integer;
    for (const auto& f : specs)
        if (!f.zeta.is_real()) ring = Ring::Eisenstein;
    Series out = Series::one(ring, N);
    for (const auto& f : specs) {
        if (f.s < 1 || f.b < 1)
            throw DomainError("Pochhammer offset and base must be >= 1");
        if (f.e == 0) continue;
        for (long j = 0; f.count < 0 || j < f.count; ++j) {
            long exponent = f.s + j * f.b;
            if (exponent > N) break;
            for (int rep = 0; rep < (f.e > 0 ? f.e : -f.e); ++rep) {
                if (f.e > 0)
                    mul_one_minus(out, exponent, f.zeta);
                else
                    div_one_minus(out, exponent, f.zeta);
            }
        }
    }
    return out;
}

bool catalog_has(const std::string& id) {
    if (fixed_products().count(id)) return true;
    long m = 0, i = 0, b = 0;
    if (parse_ag(id, m, i))
        return m >= 5 && m % 2 == 1 && i >= 1 && i <= (m - 1) / 2;
    if (parse_eta(id, b)) return b >= 1;
    return false;
}

bool catalog_has_sum(const std::string& id) {
    static const std::map<std::string, int> singles = {
        {"G", 0}, {"H", 0}, {"A", 0}, {"B", 0}, {"C", 0}};
    if (singles.count(id) || double_sums().count(id)) return true;
    long m = 0, i = 0;
    if (parse_ag(id, m, i) && catalog_has(id)) return !ag_alias(m, i).empty();
    return false;
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> out;
    for (const auto& [id, _] : fixed_products()) out.push_back(id);
    out.push_back("AG(m,i)");
    out.push_back("ETA(b)");
    return out;
}

std::vector<FactorSpec> product_recipe(const std::string& id) {
    auto it = fixed_products().find(id);
    if (it != fixed_products().end()) return it->second;
    long m = 0, i = 0, b = 0;
    if (parse_ag(id, m, i)) {
        if (!(m >= 5 && m % 2 == 1 && i >= 1 && i <= (m - 1) / 2))
            throw DomainError("AG parameters out of range in '" + id + "'");
        return {fac(kOne, i, m, 1), fac(kOne, m - i, m, 1), fac(kOne, m, m, 1),
                fac(kOne, 1, 1, -1)};
    }
    if (parse_eta(id, b)) {
        if (b < 1) throw DomainError("ETA base must be >= 1");
        return {fac(kOne, b, b, 1)};
    }
    throw UnknownIdError("unknown catalog id: '" + id + "'");
}

Series product_side(const std::string& id, long N) {
    return build_factors(product_recipe(id), N);
}

Series ag_product(long m, long i, long N) {
    std::ostringstream id;
    id << "AG(" << m << "," << i << ")";
    return product_side(id.str(), N);
}

Series sum_side(const std::string& id, long N) {
    if (id == "G") return sum_G(N);
    if (id == "H") return sum_H(N);
    if (id == "A") return sum_rs(N, true, false);
    if (id == "B") return sum_rs(N, false, false);
    if (id == "C") return sum_rs(N, false, true);
    auto it = double_sums().find(id);
    if (it != double_sums().end()) return sum_double(it->second, N);
    long m = 0, i = 0;
    if (parse_ag(id, m, i)) {
        std::string alias = catalog_has(id) ? ag_alias(m, i) : std::string();
        if (!alias.empty()) return sum_side(alias, N);
    }
    if (catalog_has(id))
        throw UnknownIdError("catalog id '" + id + "' has no sum side");
    throw UnknownIdError("unknown catalog id: '" + id + "'");
}

std::string format_factor(const FactorSpec& f) {
    std::ostringstream out;
    out << "(";
    std::string z = f.zeta.str();
    if (z == "1")
        out << "q";
    else if (z == "-1")
        out << "-q";
    else
        out << z << "q";
    if (f.s != 1) out << "^" << f.s;
    out << ";q";
    if (f.b != 1) out << "^" << f.b;
    out << ")_";
    if (f.count < 0)
        out << "inf";
    else
        out << f.count;
    if (f.e != 1) out << "^" << f.e;
    return out.str();
}

std::string describe_recipe(const std::string& id) {
    auto specs = product_recipe(id);
    std::ostringstream out;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (i) out << " * ";
        out << format_factor(specs[i]);
    }
    return out.str();
}

} // namespace qsw
