/* Python bindings for the exact q-series workbench.
 *
 * Everything crosses the boundary as plain Python types: coefficients and
 * exact rationals travel as decimal strings (they routinely exceed every
 * machine-integer width), reports as dicts, forms as lists of tuples. */

#include "qsw/asympt.hpp"
#include "qsw/catalog.hpp"
#include "qsw/expr.hpp"
#include "qsw/recognize.hpp"
#include "qsw/registry.hpp"
#include "qsw/relation.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qsw;

namespace {

std::string coef_str(const Series& s, long n) {
    switch (s.ring()) {
    case Ring::Integer: return to_string(s.at_int(n));
    case Ring::Rational: return to_string(s.at_rat(n));
    case Ring::Eisenstein: return s.at_eis(n).str();
    }
    return {};
}

py::dict report_dict(const CheckReport& r) {
    py::dict d;
    d["id"] = r.id;
    d["status"] = r.conjecture ? "conjecture" : "theorem";
    d["order"] = r.order;
    d["pass"] = r.pass;
    if (r.first_mismatch) {
        py::dict m;
        m["degree"] = r.first_mismatch->degree;
        m["lhs"] = r.first_mismatch->lhs;
        m["rhs"] = r.first_mismatch->rhs;
        d["first_mismatch"] = m;
    } else {
        d["first_mismatch"] = py::none();
    }
    d["ms"] = r.ms;
    return d;
}

py::dict recognition_dict(const RecognitionReport& rep) {
    py::dict d;
    d["ok"] = rep.residual_ok;
    if (rep.failure) {
        py::dict f;
        f["k"] = rep.failure->k;
        f["value"] = to_string(rep.failure->value);
        d["failure"] = f;
    } else {
        d["failure"] = py::none();
    }
    py::list form;
    for (const auto& [k, t] : rep.form.entries)
        form.append(py::make_tuple(k, to_string(t.r1), to_string(t.rw),
                                   to_string(t.rwb)));
    d["form"] = form;
    d["pretty"] = rep.residual_ok ? form_pretty(rep.form) : std::string();
    return d;
}

py::dict expansion_dict(const AsymptoticExpansion& e) {
    py::dict d;
    d["a"] = to_string(e.a);
    d["invx_pi2"] = to_string(e.invx_pi2);
    d["log_coef"] = to_string(e.log_coef);
    d["const_kind"] = e.const_kind == ConstKind::GammaSingle
                          ? "ln(Gamma(a)/sqrt(2 pi))"
                          : "ln(1/(2 sin(pi a)))";
    py::list poly;
    for (const auto& c : e.poly) poly.append(to_string(c));
    d["poly"] = poly;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact q-series workbench";

    py::register_exception<Error>(m, "WorkbenchError");

    m.def(
        "registry_ids",
        [] {
            std::vector<std::string> ids;
            for (const auto& e : registry()) ids.push_back(e.id);
            return ids;
        },
        "ids of every identity in the registry, in fixed order");

    m.def(
        "is_conjecture",
        [](const std::string& id) { return registry_entry(id).conjecture; },
        py::arg("id"));

    m.def(
        "run_check",
        [](const std::string& id, long order) {
            return report_dict(run_check(id, order));
        },
        py::arg("id"), py::arg("order") = -1,
        "check one identity; order -1 uses the entry's default");

    m.def(
        "run_all",
        [](long order) {
            py::list out;
            for (const auto& r : run_all(order)) out.append(report_dict(r));
            return out;
        },
        py::arg("order") = -1, "check every registry entry");

    m.def(
        "expand",
        [](const std::string& expr, long order, const std::string& ring) {
            Series s = eval_expr(parse_expr(expr), order);
            if (!ring.empty()) s = s.convert(ring_from_name(ring));
            std::vector<std::string> coefs;
            coefs.reserve(static_cast<std::size_t>(s.order()) + 1);
            for (long n = 0; n <= s.order(); ++n)
                coefs.push_back(coef_str(s, n));
            return py::make_tuple(ring_name(s.ring()), coefs);
        },
        py::arg("expr"), py::arg("order"), py::arg("ring") = std::string(),
        "evaluate an expression; returns (ring, [coefficient strings])");

    m.def(
        "normal_form",
        [](const std::string& expr) { return print_expr(parse_expr(expr)); },
        py::arg("expr"), "parse an expression and print it back");

    m.def("describe", &describe_recipe, py::arg("id"),
          "one-line factor recipe of a catalog product");

    m.def(
        "recognize",
        [](const std::string& expr, long order) {
            Series s = eval_expr(parse_expr(expr), order);
            RecognitionReport rep = s.ring() == Ring::Eisenstein
                                        ? recognize_eis(s, order)
                                        : recognize_int(s, order);
            py::dict d = recognition_dict(rep);
            if (s.ring() == Ring::Eisenstein && rep.residual_ok)
                d["norm_crosscheck"] = norm_crosscheck(s, order);
            return d;
        },
        py::arg("expr"), py::arg("order"),
        "factor a series into an eta-type product, exactly");

    m.def(
        "asympt",
        [](const std::string& a, int order, bool pair) {
            Rational av = parse_rational(a);
            return expansion_dict(pair ? expansion_pair(av, order)
                                       : expansion_single(av, order));
        },
        py::arg("a"), py::arg("order"), py::arg("pair") = false,
        "exact low-temperature expansion coefficients");

    m.def(
        "asympt_eval",
        [](const std::string& a, const std::string& x, int order, long prec,
           bool pair) {
            Rational av = parse_rational(a);
            Real xv = Real::parse(x, prec);
            AsymptoticExpansion e =
                pair ? expansion_pair(av, order) : expansion_single(av, order);
            Real direct = pair ? eval_pair_direct(av, xv, prec)
                               : eval_product_direct(av, xv, prec);
            Real approx = eval_expansion(e, xv, prec);
            py::dict d;
            d["direct"] = direct.str(prec);
            d["expansion"] = approx.str(prec);
            d["abs_error"] = (direct - approx).abs().str(20);
            return d;
        },
        py::arg("a"), py::arg("x"), py::arg("order"), py::arg("prec") = 50,
        py::arg("pair") = false,
        "numeric comparison of the expansion against direct evaluation");

    m.def(
        "modular_check",
        [](long a, long b, const std::string& x, long prec) {
            Real r = modular_normalized_check(a, b, Real::parse(x, prec), prec);
            py::dict d;
            d["normalization_exponent"] =
                to_string(normalization_exponent(a, b));
            d["ratio"] = r.str(prec);
            d["abs_error"] = (r - Real::of(1, prec)).abs().str(20);
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("x"), py::arg("prec") = 50,
        "normalized modular limit for the residue pair (a, b-a) mod b");

    m.def(
        "relation",
        [](const std::vector<std::string>& exprs, long order) {
            std::vector<Series> fs;
            fs.reserve(exprs.size());
            for (const auto& t : exprs)
                fs.push_back(eval_expr(parse_expr(t), order));
            py::list out;
            for (const auto& v : find_relation(fs, order)) {
                py::list vec;
                for (const auto& c : v) vec.append(to_string(c));
                out.append(vec);
            }
            return out;
        },
        py::arg("exprs"), py::arg("order"),
        "exact kernel basis of a list of series, as coefficient strings");
}
