/* Acceptance gate: runs the eight release criteria end to end and prints
 * one PASS/FAIL line per criterion.  Exit status 0 iff every criterion
 * passes.  Thresholds that came out of oracle calibration runs are frozen
 * here as literals. */

#include "qsw/asympt.hpp"
#include "qsw/catalog.hpp"
#include "qsw/expr.hpp"
#include "qsw/numtheory.hpp"
#include "qsw/recognize.hpp"
#include "qsw/registry.hpp"
#include "qsw/relation.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qsw;

namespace {

int g_failures = 0;

void report(int n, bool ok, const std::string& detail) {
    std::cout << "[" << n << "/8] " << (ok ? "PASS" : "FAIL") << " — "
              << detail << "\n";
    if (!ok) ++g_failures;
}

// ---------------------------------------------------------------- 1 & 2

void criterion_theorems() {
    auto t0 = std::chrono::steady_clock::now();
    long checked = 0, mismatches = 0;
    std::string first_bad;
    for (const auto& e : registry()) {
        if (e.conjecture) continue;
        CheckReport r = run_check(e.id, 300);
        ++checked;
        if (!r.pass) {
            ++mismatches;
            if (first_bad.empty()) first_bad = e.id;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() /
        1000.0;
    std::ostringstream d;
    d << checked << " theorem identities exact at order 300 in " << secs
      << " s";
    if (mismatches) d << "; " << mismatches << " FAILED (first: " << first_bad
                      << ")";
    report(1, mismatches == 0 && secs < 60.0 && checked == 31, d.str());
}

void criterion_conjectures() {
    long checked = 0, failed = 0;
    std::vector<std::string> lines;
    for (const auto& e : registry()) {
        if (!e.conjecture) continue;
        CheckReport r = run_check(e.id, 200);
        ++checked;
        if (!r.pass) ++failed;
        std::ostringstream line;
        line << "      [conjecture] " << e.id << ": "
             << (r.pass ? "verified" : "MISMATCH") << " to order " << r.order;
        lines.push_back(line.str());
    }
    std::ostringstream d;
    d << checked << " conjectural identities verified at order 200";
    report(2, failed == 0 && checked == 11, d.str());
    for (const auto& l : lines) std::cout << l << "\n";
}

// ------------------------------------------------------------------- 3

bool residues_match(const ProductForm& form, long N, long modulus,
                    std::initializer_list<long> residues) {
    for (long k = 1; k <= N; ++k) {
        bool expected = false;
        for (long r : residues)
            if (k % modulus == r % modulus) expected = true;
        auto it = form.entries.find(k);
        if (expected) {
            if (it == form.entries.end() || it->second.r1 != -1 ||
                it->second.rw != 0 || it->second.rwb != 0)
                return false;
        } else if (it != form.entries.end()) {
            return false;
        }
    }
    return true;
}

ProductForm recipe_form(const std::string& id, long N) {
    ProductForm p;
    p.max_order = N;
    p.ring = Ring::Eisenstein;
    for (const FactorSpec& f : product_recipe(id)) {
        for (long k = f.s; k <= N; k += f.b) {
            if (f.zeta == RootOfUnity::one())
                p.add(k, BigInt(f.e));
            else if (f.zeta == RootOfUnity::omega())
                p.add(k, BigInt(0), BigInt(f.e));
            else if (f.zeta == RootOfUnity::omega_bar())
                p.add(k, BigInt(0), BigInt(0), BigInt(f.e));
            else
                throw DomainError("recipe factor outside {1,w,wb}");
        }
    }
    return p;
}

void criterion_recognition() {
    bool ok = true;
    std::ostringstream d;

    RecognitionReport g = recognize_int(sum_side("G", 150), 150);
    RecognitionReport h = recognize_int(sum_side("H", 150), 150);
    ok = ok && g.residual_ok && residues_match(g.form, 150, 5, {1, 4});
    ok = ok && h.residual_ok && residues_match(h.form, 150, 5, {2, 3});

    RecognitionReport k4 = recognize_int(sum_side("K4", 120), 120);
    RecognitionReport k5 = recognize_int(sum_side("K5", 120), 120);
    ok = ok && k4.residual_ok && residues_match(k4.form, 120, 9, {2, 3, 5, 8});
    ok = ok && k5.residual_ok && residues_match(k5.form, 120, 9, {1, 4, 6, 7});

    bool eis_ok = true;
    for (const char* id : {"K6", "K7"}) {
        Series s = sum_side(id, 90);
        RecognitionReport rep = recognize_eis(s, 90);
        eis_ok = eis_ok && rep.residual_ok;
        eis_ok = eis_ok && equivalent(rep.form, recipe_form(id, 90), 90);
        eis_ok = eis_ok && norm_crosscheck(s, 90);
    }
    ok = ok && eis_ok;

    d << "recognition lands on the expected residue classes "
      << "(G/H at 150, K4/K5 at 120) and the two complex-coefficient sums "
      << "match their displayed products with norm crosscheck (order 90)";
    report(3, ok, d.str());
}

// ------------------------------------------------------------------- 4

ProductForm random_int_form(std::mt19937_64& rng, long N) {
    ProductForm p;
    p.max_order = N;
    p.ring = Ring::Integer;
    std::uniform_int_distribution<long> kd(1, 20), ed(-3, 3);
    int support = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int i = 0; i < support; ++i) {
        long e = ed(rng);
        if (e != 0) p.add(kd(rng), BigInt(e));
    }
    return p;
}

ProductForm random_eis_form(std::mt19937_64& rng, long N) {
    ProductForm p;
    p.max_order = N;
    p.ring = Ring::Eisenstein;
    std::uniform_int_distribution<long> kd(1, 15), ed(-2, 2);
    int support = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int i = 0; i < support; ++i)
        p.add(kd(rng), BigInt(ed(rng)), BigInt(ed(rng)), BigInt(ed(rng)));
    return p;
}

bool same_int_entries(const ProductForm& a, const ProductForm& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (const auto& [k, t] : a.entries) {
        auto it = b.entries.find(k);
        if (it == b.entries.end()) return false;
        if (t.r1 != it->second.r1 || sgn(t.rw) != 0 ||
            sgn(it->second.rw) != 0 || sgn(t.rwb) != 0 ||
            sgn(it->second.rwb) != 0)
            return false;
    }
    return true;
}

void criterion_roundtrip() {
    long N = 60;
    long int_ok = 0, eis_ok = 0, err_ok = 0;

    std::mt19937_64 rng_i(44001);
    for (int t = 0; t < 200; ++t) {
        ProductForm p = random_int_form(rng_i, N);
        RecognitionReport rep = recognize_int(build_product(p, N), N);
        if (rep.residual_ok && !rep.failure && same_int_entries(rep.form, p))
            ++int_ok;
    }

    std::mt19937_64 rng_e(44002);
    for (int t = 0; t < 100; ++t) {
        ProductForm p = random_eis_form(rng_e, N);
        RecognitionReport rep = recognize_eis(build_product(p, N), N);
        if (rep.residual_ok && equivalent(rep.form, p, N)) ++eis_ok;
    }

    std::mt19937_64 rng_p(44003);
    std::uniform_int_distribution<long> jd(1, N);
    for (int t = 0; t < 20; ++t) {
        ProductForm p = random_int_form(rng_p, N);
        Series f = build_product(p, N).convert(Ring::Rational);
        long j = jd(rng_p);
        f.set(j, Rational(f.at_rat(j) + Rational(1, 2)));
        RecognitionReport rep = recognize_int(f, N);
        if (!rep.residual_ok && rep.failure && rep.failure->k <= j &&
            !is_integer(rep.failure->value))
            ++err_ok;
    }

    std::ostringstream d;
    d << int_ok << "/200 integer and " << eis_ok
      << "/100 complex-coefficient forms round-trip; " << err_ok
      << "/20 fractional perturbations hit the non-integer-exponent path";
    report(4, int_ok == 200 && eis_ok == 100 && err_ok == 20, d.str());
}

// ------------------------------------------------------------------- 5

void criterion_exact_asymptotics() {
    bool ok = true;

    std::mt19937_64 rng(55001);
    std::uniform_int_distribution<long> qd(2, 50);
    for (int t = 0; t < 20; ++t) {
        long q = qd(rng);
        long p = std::uniform_int_distribution<long>(1, q - 1)(rng);
        Rational a = make_rational(p, q);
        AsymptoticExpansion e = expansion_pair(a, 40);
        for (int n = 2; n <= 40; ++n)
            if (sgn(e.poly[n - 1]) != 0) ok = false;
        // convention lock: the surviving x^1 coefficient is -B_2(a)/2,
        // which pins B_1 = -1/2 through the pair sum
        if (e.poly[0] != -bernoulli_poly(2, a) / Rational(2)) ok = false;
    }
    if (bernoulli_number(1) != Rational(-1, 2)) ok = false;

    ok = ok && asymmetry_witness(1, 3, 40) == 2;
    ok = ok && asymmetry_witness(2, 9, 40) == 2;
    ok = ok && asymmetry_witness(1, 5, 40) == 2;

    report(5, ok,
           "pair coefficients vanish exactly for x^2..x^40 over 20 random "
           "rational offsets; sign convention locked; first asymmetric term "
           "is x^2 for offsets 1/3, 2/9, 1/5");
}

// ------------------------------------------------------------------- 6

void criterion_numeric_asymptotics() {
    bool ok = true;
    std::ostringstream d;

    {
        long p = 50;
        Real x = Real::of(Rational(1, 10), p);
        Real direct = eval_product_direct(Rational(1), x, p);
        Real approx = eval_expansion(expansion_single(Rational(1), 6), x, p);
        Real err = (direct - approx).abs();
        Real tol = Real::of(10, p).pow_int(-25);
        if (!(err < tol)) ok = false;
        d << "order-6 gap at x=0.1 below 1e-25";
    }

    {
        /* The truncation error of the symmetric pair is exponentially
         * small, so at 50 digits both measurements sit on the rounding
         * floor and their ratio is meaningless.  The calibrated check runs
         * the same comparison at 200 digits, where the x = 0.2 and x = 0.1
         * errors are both genuinely resolved. */
        long p = 200;
        Rational a(1, 5);
        AsymptoticExpansion e = expansion_pair(a, 6);
        Real x1 = Real::of(Rational(1, 5), p);
        Real x2 = Real::of(Rational(1, 10), p);
        Real e1 = (eval_pair_direct(a, x1, p) - eval_expansion(e, x1, p)).abs();
        Real e2 = (eval_pair_direct(a, x2, p) - eval_expansion(e, x2, p)).abs();
        Real bound = Real::of(Rational(3, 160), p); // 2^-6 * 1.2
        if (!(e2 / e1 < bound)) ok = false;
        d << "; halving x shrinks the pair error by more than 2^-6*1.2 "
             "(200-digit oracle)";
    }

    {
        long p = 50;
        Real one = Real::of(1, p);
        Real d1 = (modular_normalized_check(1, 5, Real::of(Rational(1, 10), p),
                                            p) -
                   one)
                      .abs();
        Real d2 = (modular_normalized_check(1, 5, Real::of(Rational(1, 20), p),
                                            p) -
                   one)
                      .abs();
        if (!(d1 > d2 * Real::of(1000, p))) ok = false;
        d << "; normalized modular ratio error drops by >1e3 from x=0.1 to "
             "x=0.05";
    }

    report(6, ok, d.str());
}

// ------------------------------------------------------------------- 7

void criterion_relation() {
    bool ok = true;

    long N = 120;
    std::vector<Series> triple = {
        eval_expr(parse_expr("G*poch(q^2;q^2)/poch(q^8;q^8)"), N),
        eval_expr(parse_expr("q*H(-q^4)"), N),
        eval_expr(parse_expr("G(q^16)"), N),
    };
    auto basis = find_relation(triple, N);
    std::vector<Rational> expect = {Rational(1), Rational(-1), Rational(-1)};
    ok = ok && basis.size() == 1 && basis[0] == expect;

    auto none = find_relation(
        {product_side("K4", 80), product_side("K5", 80)}, 80);
    ok = ok && none.empty();

    report(7, ok,
           "kernel search rediscovers the (1,-1,-1) dissection vector at "
           "order 120 and finds no relation between the two order-80 "
           "independents");
}

// ------------------------------------------------------------------- 8

long count_sites(const ExprPtr& e) {
    if (!e) return 0;
    long n = 0;
    if (e->kind == Expr::Kind::Poch)
        n = static_cast<long>(e->poch_args.size()) + 1;
    return n + count_sites(e->lhs) + count_sites(e->rhs);
}

/* Clone the expression with exponent site `target` (preorder) bumped by
 * one; stores the pre-bump exponent in site_value. */
ExprPtr bump_site(const ExprPtr& e, long& target, long& site_value) {
    if (!e || target < 0) return e;
    if (e->kind == Expr::Kind::Poch) {
        long nsites = static_cast<long>(e->poch_args.size()) + 1;
        if (target < nsites) {
            auto copy = std::make_shared<Expr>(*e);
            if (target < static_cast<long>(e->poch_args.size())) {
                site_value = copy->poch_args[static_cast<std::size_t>(target)]
                                 .exp;
                copy->poch_args[static_cast<std::size_t>(target)].exp += 1;
            } else {
                site_value = copy->poch_base;
                copy->poch_base += 1;
            }
            target = -1;
            return copy;
        }
        target -= nsites;
        return e;
    }
    ExprPtr nl = bump_site(e->lhs, target, site_value);
    ExprPtr nr = bump_site(e->rhs, target, site_value);
    if (nl == e->lhs && nr == e->rhs) return e;
    auto copy = std::make_shared<Expr>(*e);
    copy->lhs = nl;
    copy->rhs = nr;
    return copy;
}

void criterion_mutation() {
    const long order = 100;
    std::mt19937_64 rng(88001);
    long entries = 0, trials = 0, caught = 0;
    std::string first_survivor;

    for (const auto& e : registry()) {
        bool modular = e.id.find("modeq") != std::string::npos ||
                       e.id.find("companion") != std::string::npos ||
                       e.id.find("surrogate") != std::string::npos;
        if (!modular) continue;
        ++entries;
        ExprPtr lhs_tree = parse_expr(e.lhs);
        ExprPtr rhs_tree = parse_expr(e.rhs);
        Series lhs = eval_expr(lhs_tree, order);
        long sites = count_sites(rhs_tree);
        for (int t = 0; t < 3; ++t) {
            long pick = std::uniform_int_distribution<long>(0, sites - 1)(rng);
            long site_value = 0;
            ExprPtr mutated = bump_site(rhs_tree, pick, site_value);
            Series rhs = eval_expr(mutated, order);
            EqualityResult eq = series_equal(lhs, rhs, order);
            ++trials;
            if (!eq.equal && eq.degree <= 2 * site_value) {
                ++caught;
            } else if (first_survivor.empty()) {
                first_survivor = e.id;
            }
        }
    }

    std::ostringstream d;
    d << caught << "/" << trials << " single-exponent perturbations across "
      << entries << " dissection identities produce a failing report with "
      << "first mismatch within twice the perturbed exponent";
    if (!first_survivor.empty()) d << " (first survivor: " << first_survivor
                                   << ")";
    report(8, entries == 23 && caught == trials && trials == entries * 3,
           d.str());
}

} // namespace

int main() {
    std::cout << "acceptance gate: exact q-series workbench\n";
    criterion_theorems();
    criterion_conjectures();
    criterion_recognition();
    criterion_roundtrip();
    criterion_exact_asymptotics();
    criterion_numeric_asymptotics();
    criterion_relation();
    criterion_mutation();
    if (g_failures == 0) {
        std::cout << "all 8 criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criteria failed\n";
    return 1;
}
