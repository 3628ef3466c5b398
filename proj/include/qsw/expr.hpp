#pragma once

#include "qsw/series.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qsw {

/* Expression language for q-series (grammar in docs/expressions.md):
 *
 *   expr := ["-"] term {("+"|"-") term}
 *   term := pow {("*"|"/") pow}
 *   pow  := atom ["^" int]
 *   atom := int | mono | name | "sum(" name ")"
 *         | "poch(" mono {"," mono} ";" mono ["," ("inf"|int)] ")"
 *         | "(" expr ")"
 *   mono := ["-"] ["w"|"wb"] "q" ["^" uint]
 *   name := catalog id [ "(" mono ")" ]     (substitution q -> mono)
 *
 * A bare catalog name denotes the product side; sum(...) selects the sum
 * side.  The poch base must be a plain power q^b. */

struct Mono {
    RootOfUnity zeta; // includes the sign
    long exp = 1;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Monomial, Poch, Name, Add, Sub, Mul, Div, Pow, Neg };

    Kind kind;

    BigInt number;                 // Number
    Mono mono;                     // Monomial
    std::vector<Mono> poch_args;   // Poch numerator monomials
    long poch_base = 1;            // Poch: base modulus b of q^b
    long poch_count = -1;          // Poch: -1 = infinite
    std::string name;              // Name: catalog id (AG/ETA args baked in)
    bool sum_sided = false;        // Name: sum side instead of product side
    bool has_subst = false;        // Name: substitution argument present
    Mono subst;                    // Name: q -> subst
    ExprPtr lhs, rhs;              // binary nodes; Pow/Neg use lhs
    long pow_exp = 1;              // Pow
};

ExprPtr parse_expr(const std::string& text);
Series eval_expr(const ExprPtr& e, long N);
std::string print_expr(const ExprPtr& e);

} // namespace qsw
