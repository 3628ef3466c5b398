/* qsw — exact q-series workbench command line.
 *
 * Subcommands:
 *   verify     check one or all registry identities at a truncation order
 *   expand     print the expansion of a catalog entry or an expression
 *   recognize  factor a series into an eta-type product, exactly
 *   asympt     exact expansion coefficients and numeric comparison
 *   relation   exact kernel of a list of series
 *
 * Exit status: 0 success / all theorem checks pass; 1 identity mismatch or
 * recognition failure; 2 usage, parse, or evaluation errors. */

#include "qsw/asympt.hpp"
#include "qsw/catalog.hpp"
#include "qsw/expr.hpp"
#include "qsw/recognize.hpp"
#include "qsw/registry.hpp"
#include "qsw/relation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace qsw;
using nlohmann::json;

namespace {

json report_to_json(const CheckReport& r) {
    json j;
    j["id"] = r.id;
    j["status"] = r.conjecture ? "conjecture" : "theorem";
    j["order"] = r.order;
    j["pass"] = r.pass;
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"degree", r.first_mismatch->degree},
                               {"lhs", r.first_mismatch->lhs},
                               {"rhs", r.first_mismatch->rhs}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["ms"] = r.ms;
    return j;
}

void print_report_line(const CheckReport& r) {
    std::ostringstream line;
    line << r.id;
    for (std::size_t i = line.str().size(); i < 22; ++i) line << ' ';
    line << (r.conjecture ? "conjecture" : "theorem   ") << "  order "
         << r.order << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.ms
         << " ms";
    if (r.first_mismatch)
        line << "  first mismatch at q^" << r.first_mismatch->degree
             << ": lhs=" << r.first_mismatch->lhs
             << " rhs=" << r.first_mismatch->rhs;
    std::cout << line.str() << "\n";
}

int run_verify(const std::string& id, bool all, long order, bool as_json) {
    std::vector<CheckReport> reports;
    if (all) {
        reports = run_all(order);
    } else {
        reports.push_back(run_check(id, order));
    }
    long passed = 0, failed = 0, conjectures = 0;
    bool theorem_failure = false;
    for (const auto& r : reports) {
        if (r.pass)
            ++passed;
        else {
            ++failed;
            if (!r.conjecture) theorem_failure = true;
        }
        if (r.conjecture) ++conjectures;
    }
    if (as_json) {
        json out;
        out["total"] = reports.size();
        out["passed"] = passed;
        out["failed"] = failed;
        out["conjectures_checked"] = conjectures;
        json results = json::array();
        for (const auto& r : reports) results.push_back(report_to_json(r));
        out["results"] = results;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_report_line(r);
        std::cout << "summary: " << reports.size() << " checked, " << passed
                  << " passed, " << failed << " failed (" << conjectures
                  << " conjectures checked)\n";
    }
    return theorem_failure ? 1 : 0;
}

Series expand_series(const std::string& id, const std::string& expr,
                     long order, const std::string& ring_name) {
    Series s = !id.empty() ? product_side(id, order)
                           : eval_expr(parse_expr(expr), order);
    if (!ring_name.empty()) s = s.convert(ring_from_name(ring_name));
    return s;
}

int run_expand(const std::string& id, const std::string& expr, long order,
               const std::string& ring, const std::string& coeffs_file) {
    Series s = expand_series(id, expr, order, ring);
    std::ostringstream header;
    if (!id.empty())
        header << "# " << describe_recipe(id) << "\n";
    else
        header << "# " << print_expr(parse_expr(expr)) << "\n";
    header << "# ring " << ring_name(s.ring()) << ", order " << s.order()
           << "\n";
    std::string text = header.str() + series_dump(s);
    if (!coeffs_file.empty()) {
        std::ofstream out(coeffs_file);
        if (!out) throw DomainError("cannot write file: " + coeffs_file);
        out << text;
        std::cout << "wrote " << (s.order() + 1) << " coefficients to "
                  << coeffs_file << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

json form_to_json(const ProductForm& p) {
    json factors = json::array();
    for (const auto& [k, t] : p.entries) {
        json f;
        f["k"] = k;
        f["r1"] = to_string(t.r1);
        if (p.ring == Ring::Eisenstein) {
            f["rw"] = to_string(t.rw);
            f["rwb"] = to_string(t.rwb);
        }
        factors.push_back(f);
    }
    return factors;
}

int run_recognize(const std::string& expr, const std::string& coeffs_file,
                  long order, bool order_given, const std::string& ring,
                  bool as_json) {
    Series s = [&] {
        if (!expr.empty()) return eval_expr(parse_expr(expr), order);
        std::ifstream in(coeffs_file);
        if (!in) throw DomainError("cannot read file: " + coeffs_file);
        std::ostringstream text;
        text << in.rdbuf();
        Ring r = ring.empty() ? Ring::Integer : ring_from_name(ring);
        return series_parse(text.str(), r);
    }();
    long n = order;
    if (!expr.empty()) {
        n = order;
    } else if (!order_given || n > s.order()) {
        n = s.order(); // a dump knows its own order
    }

    RecognitionReport rep = s.ring() == Ring::Eisenstein
                                ? recognize_eis(s, n)
                                : recognize_int(s, n);
    bool norm_ok = true;
    if (s.ring() == Ring::Eisenstein && rep.residual_ok)
        norm_ok = norm_crosscheck(s, n);

    if (as_json) {
        json out;
        out["order"] = n;
        out["ok"] = rep.residual_ok;
        if (rep.failure) {
            out["failure"] = {{"k", rep.failure->k},
                              {"value", to_string(rep.failure->value)}};
        } else {
            out["failure"] = nullptr;
            out["form"] = form_to_json(rep.form);
            out["pretty"] = form_pretty(rep.form);
            if (s.ring() == Ring::Eisenstein) out["norm_crosscheck"] = norm_ok;
        }
        std::cout << out.dump(2) << "\n";
    } else if (rep.residual_ok) {
        std::cout << form_pretty(rep.form) << "\n";
        if (s.ring() == Ring::Eisenstein)
            std::cout << "# norm crosscheck: " << (norm_ok ? "ok" : "FAILED")
                      << "\n";
    } else if (rep.failure) {
        std::cout << "not an eta-type product: exponent at k="
                  << rep.failure->k << " is " << to_string(rep.failure->value)
                  << ", not an integer\n";
    } else {
        std::cout << "not an eta-type product: residual mismatch\n";
    }
    return (rep.residual_ok && norm_ok) ? 0 : 1;
}

void print_exact_coefficients(const AsymptoticExpansion& e) {
    std::cout << "pi^2/x coefficient: " << to_string(e.invx_pi2) << "\n";
    std::cout << "ln x coefficient:   " << to_string(e.log_coef) << "\n";
    if (e.const_kind == ConstKind::GammaSingle)
        std::cout << "constant term:      ln(Gamma(" << to_string(e.a)
                  << ")/sqrt(2 pi))\n";
    else
        std::cout << "constant term:      ln(1/(2 sin(pi " << to_string(e.a)
                  << ")))\n";
    for (std::size_t i = 0; i < e.poly.size(); ++i)
        if (sgn(e.poly[i]) != 0)
            std::cout << "x^" << (i + 1)
                      << " coefficient:   " << to_string(e.poly[i]) << "\n";
}

int run_asympt(const std::string& a_text, bool pair, long b, long order,
               const std::string& x_text, long prec, bool as_json) {
    Rational a = parse_rational(a_text);
    Real x = Real::parse(x_text, prec);

    if (b > 0) {
        // normalized modular limit for the residue pair (a, b-a) mod b
        if (!is_integer(a))
            throw DomainError("--b expects an integer offset in --a");
        long an = a.get_num().get_si();
        Real r = modular_normalized_check(an, b, x, prec);
        Real err = (r - Real::of(1, prec)).abs();
        if (as_json) {
            json out;
            out["kind"] = "modular";
            out["a"] = an;
            out["b"] = b;
            out["x"] = x_text;
            out["prec"] = prec;
            out["normalization_exponent"] =
                to_string(normalization_exponent(an, b));
            out["ratio"] = r.str(prec);
            out["abs_error"] = err.str(20);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "normalization exponent: "
                      << to_string(normalization_exponent(an, b)) << "\n";
            std::cout << "normalized ratio R = " << r.str(prec) << "\n";
            std::cout << "|R - 1| = " << err.str(20) << "\n";
        }
        return 0;
    }

    AsymptoticExpansion e =
        pair ? expansion_pair(a, static_cast<int>(order))
             : expansion_single(a, static_cast<int>(order));
    Real direct = pair ? eval_pair_direct(a, x, prec)
                       : eval_product_direct(a, x, prec);
    Real approx = eval_expansion(e, x, prec);
    Real err = (direct - approx).abs();

    if (as_json) {
        json out;
        out["kind"] = pair ? "pair" : "single";
        out["a"] = a_text;
        out["order"] = order;
        out["x"] = x_text;
        out["prec"] = prec;
        out["invx_pi2"] = to_string(e.invx_pi2);
        out["log_coef"] = to_string(e.log_coef);
        out["const"] = eval_const(e, prec).str(prec);
        json poly = json::array();
        for (const auto& c : e.poly) poly.push_back(to_string(c));
        out["poly"] = poly;
        out["direct"] = direct.str(prec);
        out["expansion"] = approx.str(prec);
        out["abs_error"] = err.str(20);
        std::cout << out.dump(2) << "\n";
    } else {
        print_exact_coefficients(e);
        std::cout << "direct value:    " << direct.str(prec) << "\n";
        std::cout << "expansion value: " << approx.str(prec) << "\n";
        std::cout << "|difference|:    " << err.str(20) << "\n";
    }
    return 0;
}

int run_relation(const std::vector<std::string>& exprs, long order,
                 bool as_json) {
    std::vector<Series> fs;
    fs.reserve(exprs.size());
    for (const auto& t : exprs) fs.push_back(eval_expr(parse_expr(t), order));
    auto basis = find_relation(fs, order);
    if (as_json) {
        json out;
        out["order"] = order;
        json vecs = json::array();
        for (const auto& v : basis) {
            json vec = json::array();
            for (const auto& c : v) vec.push_back(to_string(c));
            vecs.push_back(vec);
        }
        out["basis"] = vecs;
        std::cout << out.dump(2) << "\n";
    } else if (basis.empty()) {
        std::cout << "no relation found to order " << order << "\n";
    } else {
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < v.size(); ++i)
                std::cout << (i ? " " : "") << to_string(v[i]);
            std::cout << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series workbench"};
    app.require_subcommand(1);

    // verify
    std::string v_id;
    bool v_all = false, v_json = false;
    long v_order = 150;
    auto* verify =
        app.add_subcommand("verify", "check registry identities exactly");
    verify->add_option("--id", v_id, "identity id to check");
    verify->add_flag("--all", v_all, "check every registry entry");
    verify->add_option("--order", v_order, "truncation order (default 150)");
    verify->add_flag("--json", v_json, "machine-readable report");

    // expand
    std::string e_id, e_expr, e_ring, e_coeffs;
    long e_order = 150;
    auto* expand = app.add_subcommand(
        "expand", "expand a catalog entry or expression to a coefficient dump");
    expand->add_option("--id", e_id, "catalog id (G, H, K6, AG(11,2), ...)");
    expand->add_option("--expr", e_expr, "expression to expand");
    expand->add_option("--order", e_order, "truncation order (default 150)");
    expand->add_option("--ring", e_ring, "coefficient ring: int, rat or eis");
    expand->add_option("--coeffs", e_coeffs, "write the dump to this file");

    // recognize
    std::string r_expr, r_coeffs, r_ring;
    long r_order = 150;
    bool r_json = false;
    auto* recognize = app.add_subcommand(
        "recognize", "factor a series into an eta-type product");
    recognize->add_option("--expr", r_expr, "expression to recognize");
    recognize->add_option("--coeffs", r_coeffs,
                          "read a coefficient dump from this file");
    auto* r_order_opt = recognize->add_option(
        "--order", r_order, "recognition order (default 150 or file order)");
    recognize->add_option("--ring", r_ring,
                          "ring of a coefficient file: int, rat or eis");
    recognize->add_flag("--json", r_json, "machine-readable report");

    // asympt
    std::string a_a, a_x = "0.1";
    bool a_pair = false, a_json = false;
    long a_b = 0, a_order = 8, a_prec = 50;
    auto* asympt = app.add_subcommand(
        "asympt", "exact expansion coefficients and numeric comparison");
    asympt->add_option("--a", a_a, "offset as a fraction P/Q")->required();
    asympt->add_flag("--pair", a_pair, "use the symmetric pair a, 1-a");
    asympt->add_option("--b", a_b,
                       "modulus: run the normalized modular check for "
                       "residues +-a mod b");
    asympt->add_option("--order", a_order, "expansion order (default 8)");
    asympt->add_option("--x", a_x, "evaluation point (default 0.1)");
    asympt->add_option("--prec", a_prec, "decimal digits (default 50)");
    asympt->add_flag("--json", a_json, "machine-readable report");

    // relation
    std::vector<std::string> l_exprs;
    long l_order = 150;
    bool l_json = false;
    auto* relation = app.add_subcommand(
        "relation", "exact kernel of a list of series");
    relation->add_option("--expr", l_exprs,
                         "series expression (repeat two or more times)");
    relation->add_option("--order", l_order, "matching order (default 150)");
    relation->add_flag("--json", l_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            if (v_all == !v_id.empty()) {
                std::cerr << "verify: pass exactly one of --id or --all\n";
                return 2;
            }
            return run_verify(v_id, v_all, v_order, v_json);
        }
        if (expand->parsed()) {
            if (e_id.empty() == e_expr.empty()) {
                std::cerr << "expand: pass exactly one of --id or --expr\n";
                return 2;
            }
            return run_expand(e_id, e_expr, e_order, e_ring, e_coeffs);
        }
        if (recognize->parsed()) {
            if (r_expr.empty() == r_coeffs.empty()) {
                std::cerr
                    << "recognize: pass exactly one of --expr or --coeffs\n";
                return 2;
            }
            return run_recognize(r_expr, r_coeffs, r_order,
                                 r_order_opt->count() > 0, r_ring, r_json);
        }
        if (asympt->parsed()) {
            if (a_pair && a_b > 0) {
                std::cerr << "asympt: --pair and --b are exclusive\n";
                return 2;
            }
            return run_asympt(a_a, a_pair, a_b, a_order, a_x, a_prec, a_json);
        }
        if (relation->parsed())
            return run_relation(l_exprs, l_order, l_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": "
                  << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
